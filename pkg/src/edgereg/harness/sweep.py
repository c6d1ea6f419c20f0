"""Sweeps: map ``verify_graph`` over a stream of graphs and summarise."""

from __future__ import annotations

import csv
import io
import json
import sys
from collections import Counter
from dataclasses import dataclass, field
from functools import partial
from multiprocessing import Pool
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from edgereg.graph import Graph
from edgereg.harness.enumerate import enumerate_graphs_upto
from edgereg.harness.graph6 import parse_edge_lists, read_graph6
from edgereg.harness.theorems import THEOREMS, RunConfig, TheoremReport, verify_graph

CSV_SKIP = ("witness_ind_match_k2c5", "witness_min_match_k2c5", "pc_certificate")


def detect_format(path: str) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "graph6"
    if suffix in (".edges", ".el", ".edgelist"):
        return "edges"
    with open(path, encoding="ascii") as fh:
        for line in fh:
            text = line.split("#", 1)[0].strip()
            if text:
                parts = text.split()
                return "edges" if len(parts) == 2 and all(p.isdigit() for p in parts) else "graph6"
    return "graph6"


def load_graphs(path: str, fmt: str = "auto") -> list[Graph]:
    fmt = detect_format(path) if fmt == "auto" else fmt
    with open(path, encoding="ascii") as fh:
        if fmt == "graph6":
            return list(read_graph6(fh))
        return list(parse_edge_lists(fh))


def input_graphs(cfg: RunConfig) -> Iterator[Graph]:
    if cfg.input is None:
        yield from enumerate_graphs_upto(cfg.max_n, cfg.min_n)
        return
    for g in load_graphs(cfg.input, cfg.input_format):
        if g.n > cfg.max_n:
            raise ValueError(f"input graph on {g.n} vertices exceeds --max-n {cfg.max_n}")
        yield g


@dataclass
class SweepSummary:
    graphs: int = 0
    applicable: Counter = field(default_factory=Counter)
    passed: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)
    lower_gap: Counter = field(default_factory=Counter)  # reg - ind-match{K2,C5}
    upper_gap: Counter = field(default_factory=Counter)  # min-match{K2,C5} - reg
    first_failures: list = field(default_factory=list)
    extremal: dict = field(default_factory=dict)

    def add(self, report: TheoremReport):
        self.graphs += 1
        inv = report.invariants
        for v in report.verdicts:
            if v.applicable:
                self.applicable[v.id] += 1
                if v.passed:
                    self.passed[v.id] += 1
                else:
                    self.failed[v.id] += 1
                    if len(self.first_failures) < 20:
                        self.first_failures.append((v.id, inv["graph6"]))
        lo = inv["reg"] - inv["ind_match_k2c5"]
        hi = inv["min_match_k2c5"] - inv["reg"]
        self.lower_gap[lo] += 1
        self.upper_gap[hi] += 1
        for key, gap in (("lower", lo), ("upper", hi)):
            if key not in self.extremal or gap > self.extremal[key][0]:
                self.extremal[key] = (gap, inv["graph6"])

    @property
    def total_failures(self) -> int:
        return sum(self.failed.values())

    def render(self) -> str:
        out = io.StringIO()
        out.write(f"graphs checked: {self.graphs}\n")
        out.write(f"{'check':<6}{'applicable':>12}{'passed':>10}{'failed':>10}  statement\n")
        for tid, text in THEOREMS.items():
            out.write(f"{tid:<6}{self.applicable[tid]:>12}{self.passed[tid]:>10}{self.failed[tid]:>10}  {text}\n")
        for label, counts, key in (("reg - ind-match{K2,C5}", self.lower_gap, "lower"),
                                   ("min-match{K2,C5} - reg", self.upper_gap, "upper")):
            dist = ", ".join(f"{g}: {c}" for g, c in sorted(counts.items()))
            ext = self.extremal.get(key)
            tail = f"; max {ext[0]} first at {ext[1]}" if ext else ""
            out.write(f"gap {label}: {{{dist}}}{tail}\n")
        if self.first_failures:
            out.write("failures: " + ", ".join(f"{t} on {g}" for t, g in self.first_failures) + "\n")
        out.write("RESULT: " + ("FAIL" if self.total_failures else "PASS") + "\n")
        return out.getvalue()


def _verify_indexed(item: tuple[int, Graph], cfg: RunConfig) -> TheoremReport:
    index, g = item
    return verify_graph(g, cfg, index=index)


def iter_reports(cfg: RunConfig, graphs: Iterable[Graph] | None = None) -> Iterator[TheoremReport]:
    """Reports in input order, computed with ``cfg.jobs`` worker processes."""
    items = enumerate(input_graphs(cfg) if graphs is None else graphs)
    work = partial(_verify_indexed, cfg=cfg)
    if cfg.jobs == 1:
        yield from map(work, items)
        return
    with Pool(cfg.jobs) as pool:
        yield from pool.imap(work, items, chunksize=8)


def csv_row(report: TheoremReport) -> dict:
    row = {}
    for k, val in report.invariants.items():
        if k in CSV_SKIP:
            continue
        row[k] = json.dumps(val) if isinstance(val, (list, dict)) else val
    for v in report.verdicts:
        row[v.id] = "n/a" if not v.applicable else ("pass" if v.passed else "fail")
    return row


class ReportWriter:
    def __init__(self, stream: TextIO | None, fmt: str = "jsonl"):
        self.stream = stream
        self.fmt = fmt
        self._csv = None

    def write(self, report: TheoremReport):
        if self.stream is None:
            return
        if self.fmt == "jsonl":
            self.stream.write(json.dumps(report.to_json()) + "\n")
        else:
            row = csv_row(report)
            if self._csv is None:
                self._csv = csv.DictWriter(self.stream, fieldnames=list(row), lineterminator="\n")
                self._csv.writeheader()
            self._csv.writerow(row)
        self.stream.flush()


def run_sweep(cfg: RunConfig, reports_out: TextIO | None = None, summary_out: TextIO | None = sys.stdout,
              graphs: Iterable[Graph] | None = None) -> SweepSummary:
    summary = SweepSummary()
    writer = ReportWriter(reports_out, cfg.output_format)
    for report in iter_reports(cfg, graphs):
        writer.write(report)
        summary.add(report)
    if summary_out is not None:
        summary_out.write(summary.render())
        summary_out.flush()
    return summary
