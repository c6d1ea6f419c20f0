import sys

from edgereg.harness.cli import main

sys.exit(main())
