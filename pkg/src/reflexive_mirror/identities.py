"""Combinatorial identities satisfied by every reflexive 3-polytope.

They are theorems, so a failing check always means a bug upstream (hull,
duality or point counting).  Reports keep both sides of every equation to
make such a failure easy to localize.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple

from .counts import duality_counts
from .errors import NotReflexive
from .polytope import LatticePolytope, polar_dual


class Check(NamedTuple):
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class IdentityReport:
    polytope_id: Any
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, c in self.checks.items() if not c.passed]

    def as_dict(self) -> dict:
        return {
            "id": self.polytope_id,
            "passed": self.passed,
            "checks": {name: {"lhs": c.lhs, "rhs": c.rhs, "pass": c.passed}
                       for name, c in self.checks.items()},
        }


def verify_identities(P: LatticePolytope, polytope_id: Any = None) -> IdentityReport:
    """Evaluate the volume, 24-, 28-, dual decomposition, Euler and point
    decomposition identities for a reflexive P and its dual.
    """
    if not P.is_reflexive:
        raise NotReflexive(f"{P!r} is not reflexive")
    c = duality_counts(P)
    d = duality_counts(polar_dual(P))
    checks = {
        "volume": Check(c.volume, 2 * c.l - 6),
        "volume_dual": Check(c.volume_dual, 2 * c.l_dual - 6),
        "edge_sum_24": Check(c.edges_shifted_product, 24),
        "sum_28": Check(c.l + c.l_dual + c.edges_lstar_product
                        - c.vertex_duals_lstar - c.facets_lstar, 28),
        "dual_point_count": Check(
            c.l_dual,
            c.vertex_duals_lstar + c.dual_edges_lstar + c.n_facets + 1),
        "euler": Check(c.n_vertices - c.n_edges + c.n_facets, 2),
        "euler_dual": Check(d.n_vertices - d.n_edges + d.n_facets, 2),
        "point_decomposition": Check(
            c.l, c.facets_lstar + c.edges_lstar + c.n_vertices + 1),
        "point_decomposition_dual": Check(
            d.l, d.facets_lstar + d.edges_lstar + d.n_vertices + 1),
    }
    return IdentityReport(polytope_id, checks)
