"""Exhaustive cross-check of the closed-form basis against Buchberger."""

from __future__ import annotations

from dataclasses import dataclass, field

from .edge_ideal import generator_polynomials, has_quadratic_gb, initial_ideal, theoretical_groebner
from .graph import LabeledGraph, all_graphs, is_closed_labeling
from .groebner import buchberger_reduced


@dataclass
class OracleReport:
    max_n: int
    graphs_checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_graph(G: LabeledGraph) -> list[str]:
    """Names of the checks ``G`` fails (empty when all agree)."""
    failed = []
    theory = theoretical_groebner(G).polynomials
    if G.edges:
        if theory != buchberger_reduced(generator_polynomials(G)).generators:
            failed.append("basis")
    elif theory:
        failed.append("basis")
    if has_quadratic_gb(G) != is_closed_labeling(G).closed:
        failed.append("quadratic")
    if not initial_ideal(G).squarefree:
        failed.append("squarefree")
    return failed


def run_oracle_suite(max_n: int) -> OracleReport:
    """Every labeled graph on ``1..n`` for ``n <= max_n``."""
    report = OracleReport(max_n)
    for n in range(1, max_n + 1):
        for G in all_graphs(n):
            report.graphs_checked += 1
            failed = check_graph(G)
            if failed:
                report.failures.append({"n": n, "edges": [list(e) for e in G.sorted_edges()], "checks": failed})
    return report
