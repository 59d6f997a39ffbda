"""Verification records, corpus sweeps, and reporting for the chromatic
bounds on 3K1-free graphs:

  MR2: delta >= 8            =>  chi <= max(omega, delta-1)
  MR1: omega = 4, delta >= 7 =>  chi <= delta-1
  BK : delta >= 9            =>  chi <= max(omega, delta-1)

plus the closed-neighborhood clique property at every vertex.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .canon import CANON_MAX_VERTICES, canonical_form, corpus_3k1_free
from .chromatic import chromatic_number
from .graph import Graph, to_graph6
from .invariants import check_statement_I, is_3k1_free, max_clique, max_degree
from .kempe import EngineTelemetry, SearchConfig, color_3k1_free


@dataclass(frozen=True)
class EngineStats:
    rule_count: int = 0
    search_count: int = 0
    fallback_count: int = 0
    failed: bool = False


@dataclass(frozen=True)
class VerificationRecord:
    id: str
    n: int
    delta: int
    omega: int
    chi: int
    bound_mr2: int
    mr2_applicable: bool
    mr2_pass: bool
    mr1_applicable: bool
    mr1_pass: bool
    bk_applicable: bool
    bk_pass: bool
    statement_I_pass: bool
    engine: EngineStats
    diagnostic: Optional[str] = None

    def violations(self) -> list[str]:
        out = []
        if self.mr2_applicable and not self.mr2_pass:
            out.append("mr2")
        if self.mr1_applicable and not self.mr1_pass:
            out.append("mr1")
        if self.bk_applicable and not self.bk_pass:
            out.append("bk")
        if not self.statement_I_pass:
            out.append("statement_I")
        return out

    def to_json(self) -> str:
        payload = {
            "id": self.id,
            "n": self.n,
            "delta": self.delta,
            "omega": self.omega,
            "chi": self.chi,
            "bound_mr2": self.bound_mr2,
            "mr2_applicable": self.mr2_applicable,
            "mr2_pass": self.mr2_pass,
            "mr1_applicable": self.mr1_applicable,
            "mr1_pass": self.mr1_pass,
            "bk_applicable": self.bk_applicable,
            "bk_pass": self.bk_pass,
            "statement_I_pass": self.statement_I_pass,
            "engine": {
                "rule_count": self.engine.rule_count,
                "search_count": self.engine.search_count,
                "fallback_count": self.engine.fallback_count,
                "failed": self.engine.failed,
            },
            "diagnostic": self.diagnostic,
        }
        return json.dumps(payload, separators=(",", ":"))

    @staticmethod
    def from_json(line: str) -> "VerificationRecord":
        d = json.loads(line)
        return VerificationRecord(
            id=d["id"],
            n=d["n"],
            delta=d["delta"],
            omega=d["omega"],
            chi=d["chi"],
            bound_mr2=d["bound_mr2"],
            mr2_applicable=d["mr2_applicable"],
            mr2_pass=d["mr2_pass"],
            mr1_applicable=d["mr1_applicable"],
            mr1_pass=d["mr1_pass"],
            bk_applicable=d["bk_applicable"],
            bk_pass=d["bk_pass"],
            statement_I_pass=d["statement_I_pass"],
            engine=EngineStats(**d["engine"]),
            diagnostic=d.get("diagnostic"),
        )


def verify_graph(
    g: Graph, config: SearchConfig = SearchConfig(), graph_id: Optional[str] = None
) -> VerificationRecord:
    """Exact invariants plus every bound check for a single graph.

    Non-3K1-free inputs are not an error: the record carries a diagnostic
    and every applicability flag stays false.
    """
    if graph_id is None:
        graph_id = canonical_form(g) if g.n <= CANON_MAX_VERTICES else to_graph6(g)
    delta = max_degree(g)
    omega = max_clique(g).omega
    chi, _ = chromatic_number(g)
    bound_mr2 = max(omega, delta - 1)
    free3 = is_3k1_free(g)

    if free3:
        mr2_app = delta >= 8
        mr1_app = omega == 4 and delta >= 7
        bk_app = delta >= 9
        statement_ok = all(check_statement_I(g, u) for u in range(g.n))
        _, telemetry = color_3k1_free(g, config)
        engine = EngineStats(
            rule_count=telemetry.rule_count,
            search_count=telemetry.search_count,
            fallback_count=telemetry.fallback_count,
            failed=telemetry.failed,
        )
        diagnostic = None
    else:
        mr2_app = mr1_app = bk_app = False
        statement_ok = True
        engine = EngineStats()
        diagnostic = "not 3K1-free: hypotheses of every bound are unmet"

    return VerificationRecord(
        id=graph_id,
        n=g.n,
        delta=delta,
        omega=omega,
        chi=chi,
        bound_mr2=bound_mr2,
        mr2_applicable=mr2_app,
        mr2_pass=(not mr2_app) or chi <= bound_mr2,
        mr1_applicable=mr1_app,
        mr1_pass=(not mr1_app) or chi <= delta - 1,
        bk_applicable=bk_app,
        bk_pass=(not bk_app) or chi <= bound_mr2,
        statement_I_pass=statement_ok,
        engine=engine,
        diagnostic=diagnostic,
    )


def verify_corpus(
    graphs: Iterable[tuple[Optional[str], Graph]], config: SearchConfig = SearchConfig()
) -> Iterator[VerificationRecord]:
    for graph_id, g in graphs:
        yield verify_graph(g, config, graph_id)


def enumerated_corpus(n: int, min_delta: int = 0) -> Iterator[tuple[str, Graph]]:
    yield from corpus_3k1_free(n, min_delta)


@dataclass
class Summary:
    total: int = 0
    mr2_applicable: int = 0
    mr1_applicable: int = 0
    bk_applicable: int = 0
    inapplicable: int = 0
    violations: list[tuple[str, str]] = field(default_factory=list)  # (id, which)
    engine_totals: Counter = field(default_factory=Counter)
    chi_hist: Counter = field(default_factory=Counter)
    delta_hist: Counter = field(default_factory=Counter)
    omega_hist: Counter = field(default_factory=Counter)

    def add(self, rec: VerificationRecord) -> None:
        self.total += 1
        self.mr2_applicable += rec.mr2_applicable
        self.mr1_applicable += rec.mr1_applicable
        self.bk_applicable += rec.bk_applicable
        self.inapplicable += rec.diagnostic is not None
        for which in rec.violations():
            self.violations.append((rec.id, which))
        self.engine_totals["rule"] += rec.engine.rule_count
        self.engine_totals["search"] += rec.engine.search_count
        self.engine_totals["fallback"] += rec.engine.fallback_count
        self.engine_totals["failed"] += rec.engine.failed
        self.chi_hist[rec.chi] += 1
        self.delta_hist[rec.delta] += 1
        self.omega_hist[rec.omega] += 1


def summarize(records: Iterable[VerificationRecord]) -> Summary:
    summary = Summary()
    for rec in records:
        summary.add(rec)
    return summary


def _hist_line(name: str, hist: Counter) -> str:
    cells = " ".join(f"{k}:{hist[k]}" for k in sorted(hist))
    return f"{name} histogram: {cells}"


def report(records: Iterable[VerificationRecord], fmt: str = "text") -> str:
    """Aggregate record stream into a text or CSV summary."""
    summary = summarize(records)
    if fmt == "csv":
        lines = ["metric,value"]
        lines.append(f"graphs,{summary.total}")
        lines.append(f"mr2_applicable,{summary.mr2_applicable}")
        lines.append(f"mr1_applicable,{summary.mr1_applicable}")
        lines.append(f"bk_applicable,{summary.bk_applicable}")
        lines.append(f"inapplicable,{summary.inapplicable}")
        lines.append(f"violations,{len(summary.violations)}")
        for key in ("rule", "search", "fallback", "failed"):
            lines.append(f"engine_{key},{summary.engine_totals[key]}")
        for name, hist in (("chi", summary.chi_hist), ("delta", summary.delta_hist), ("omega", summary.omega_hist)):
            for k in sorted(hist):
                lines.append(f"{name}_{k},{hist[k]}")
        for gid, which in summary.violations:
            lines.append(f"violation_{which},{gid}")
        return "\n".join(lines) + "\n"
    lines = [
        f"graphs verified: {summary.total} ({summary.inapplicable} not 3K1-free)",
        f"applicable: mr2={summary.mr2_applicable} mr1={summary.mr1_applicable} bk={summary.bk_applicable}",
        f"violations: {len(summary.violations)}",
        "engine: rule={rule} search={search} fallback={fallback} failed={failed}".format(
            **{k: summary.engine_totals[k] for k in ("rule", "search", "fallback", "failed")}
        ),
        _hist_line("chi", summary.chi_hist),
        _hist_line("delta", summary.delta_hist),
        _hist_line("omega", summary.omega_hist),
    ]
    for gid, which in summary.violations:
        lines.append(f"VIOLATION {which}: {gid}")
    return "\n".join(lines) + "\n"
