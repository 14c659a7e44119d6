"""Batch verification of the two-color conjecture over graph corpora.

Each input graph gets a SweepRecord: K2 is excluded by the conjecture
statement; otherwise a matching constructive colorer runs, falling back to
the exact solver at two colors. A counterexample candidate is recorded only
when a COMPLETED exact search finds nothing; blown budgets stay
inconclusive. Every witness is re-verified before it is recorded.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable, Iterator

from .classify import classify
from .colorers import color_double_auto
from .decomposition import Decomposition, verify
from .graph_io import decomposition_from_json, decomposition_to_json, to_graph6
from .graphs import SimpleGraph, double
from .solver import SearchLimits, SearchStatus, exact_lir_multigraph

RESULT_TWO_COLORS = "lir<=2"
RESULT_CANDIDATE = "counterexample-candidate"
RESULT_INCONCLUSIVE = "inconclusive"
RESULT_EXCLUDED = "excluded"
RESULT_ERROR = "error"


@dataclass
class SweepRecord:
    graph_id: str  # graph6
    n: int
    m: int
    class_tag: str
    method: str  # constructive | exact | both | none
    result: str
    witness: Decomposition | None = None
    runtime: float = 0.0
    detail: str = ""

    def to_json(self) -> str:
        payload = {
            "graph": self.graph_id,
            "n": self.n,
            "m": self.m,
            "class": self.class_tag,
            "method": self.method,
            "result": self.result,
            "witness": (
                json.loads(decomposition_to_json(self.witness))
                if self.witness is not None
                else None
            ),
            "runtime": round(self.runtime, 6),
            "detail": self.detail,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "SweepRecord":
        payload = json.loads(text)
        witness = None
        if payload.get("witness") is not None:
            witness = decomposition_from_json(json.dumps(payload["witness"]))
        return cls(
            graph_id=payload["graph"],
            n=payload["n"],
            m=payload["m"],
            class_tag=payload["class"],
            method=payload["method"],
            result=payload["result"],
            witness=witness,
            runtime=payload.get("runtime", 0.0),
            detail=payload.get("detail", ""),
        )


def check_graph(
    g: SimpleGraph, lim: SearchLimits | None = None, cross_check: bool = False
) -> SweepRecord:
    """Conjecture check for one connected graph."""
    lim = lim or SearchLimits()
    start = time.perf_counter()
    gid = to_graph6(g) if g.n <= 62 else f"n{g.n}m{g.m}"
    if g.n == 2 and g.m == 1:
        return SweepRecord(
            gid, g.n, g.m, "path", "none", RESULT_EXCLUDED,
            runtime=time.perf_counter() - start,
            detail="excluded by conjecture statement",
        )
    try:
        tag = classify(g)
    except ValueError as exc:
        return SweepRecord(
            gid, g.n, g.m, "?", "none", RESULT_ERROR,
            runtime=time.perf_counter() - start, detail=str(exc),
        )
    witness = color_double_auto(g)
    method = "constructive" if witness is not None else "exact"
    result = RESULT_TWO_COLORS
    detail = ""
    if witness is not None and cross_check:
        method = "both"
    if witness is None or cross_check:
        two_color_lim = SearchLimits(
            max_colors=2, max_edges=lim.max_edges, node_budget=lim.node_budget
        )
        res = exact_lir_multigraph(double(g), two_color_lim)
        if res.status is SearchStatus.FOUND:
            if witness is not None and cross_check:
                detail = "constructive and exact agree"
            else:
                witness = res.witness
        elif res.status is SearchStatus.NONE:
            if witness is not None:
                raise AssertionError(
                    f"constructive witness exists but exact search found none: {gid}"
                )
            result = RESULT_CANDIDATE
            detail = "completed exact search found no two-coloring"
        else:
            if witness is None:
                result = RESULT_INCONCLUSIVE
                detail = "node budget exhausted"
            else:
                detail = "exact cross-check inconclusive"
    if witness is not None:
        report = verify(witness)
        if not report.valid:
            raise AssertionError(f"witness failed re-verification: {gid}")
    return SweepRecord(
        gid, g.n, g.m, tag.kind.value, method, result,
        witness=witness if result == RESULT_TWO_COLORS else None,
        runtime=time.perf_counter() - start, detail=detail,
    )


def _check_star(args) -> SweepRecord:
    g, lim, cross_check = args
    return check_graph(g, lim, cross_check)


def sweep(
    source: Iterable[SimpleGraph],
    lim: SearchLimits | None = None,
    cross_check: bool = False,
    jobs: int = 1,
    skip_ids: set[str] | None = None,
) -> Iterator[SweepRecord]:
    """Check every graph from the source, in input order.

    skip_ids supports resuming: graphs whose graph6 id is present are not
    re-checked. Workers share nothing; report order equals input order.
    """
    lim = lim or SearchLimits()
    graphs = (
        g
        for g in source
        if not skip_ids or (g.n > 62 or to_graph6(g) not in skip_ids)
    )
    if jobs <= 1:
        for g in graphs:
            yield check_graph(g, lim, cross_check)
        return
    with Pool(processes=jobs) as pool:
        tasks = ((g, lim, cross_check) for g in graphs)
        for record in pool.imap(_check_star, tasks, chunksize=8):
            yield record


@dataclass
class SweepSummary:
    total: int = 0
    by_result: dict = field(default_factory=dict)
    by_method: dict = field(default_factory=dict)

    def add(self, record: SweepRecord) -> None:
        self.total += 1
        self.by_result[record.result] = self.by_result.get(record.result, 0) + 1
        self.by_method[record.method] = self.by_method.get(record.method, 0) + 1

    @property
    def counterexample_candidates(self) -> int:
        return self.by_result.get(RESULT_CANDIDATE, 0)

    def table(self) -> str:
        lines = [f"graphs checked: {self.total}"]
        for key in sorted(self.by_result):
            lines.append(f"  result {key:<26} {self.by_result[key]}")
        for key in sorted(self.by_method):
            lines.append(f"  method {key:<26} {self.by_method[key]}")
        return "\n".join(lines)


def load_report_ids(path: str) -> set[str]:
    """Graph ids already present in a JSON-lines report (for --resume)."""
    ids = set()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    ids.add(json.loads(line)["graph"])
    except FileNotFoundError:
        pass
    return ids
