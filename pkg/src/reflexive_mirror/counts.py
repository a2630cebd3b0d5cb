"""Face-wise lattice point sums of a reflexive polytope and its polar dual.

Every closed formula in the package (the identities and all four Hodge
families) is a linear combination of the sums collected here.
"""
from __future__ import annotations

from dataclasses import dataclass

from .polytope import LatticePolytope, dual_face, polar_dual


@dataclass(frozen=True)
class DualityCounts:
    l: int                      # l(P)
    l_dual: int                 # l(P°)
    n_vertices: int
    n_edges: int
    n_facets: int
    facets_lstar: int           # sum over facets G of l*(G)
    edges_lstar: int            # sum over edges t of l*(t)
    dual_edges_lstar: int       # sum over edges t of l*(t°)
    edges_lstar_product: int    # sum over edges t of l*(t) l*(t°)
    edges_shifted_product: int  # sum over edges t of (l*(t)+1)(l*(t°)+1)
    vertex_duals_lstar: int     # sum over vertices v of l*(v°)
    volume: int                 # 3! vol(P)
    volume_dual: int            # 3! vol(P°)
    vertex_genera: tuple        # l*(v°) per vertex of P, in vertex order


def duality_counts(P: LatticePolytope) -> DualityCounts:
    """Collect the sums for a reflexive P (raises NotReflexive otherwise)."""
    cached = P.__dict__.get("_duality_counts")
    if cached is not None:
        return cached
    D = polar_dual(P)
    s, sd = P.stats, D.stats
    lstar, lstar_d = s.lstar_per_face, sd.lstar_per_face

    edge_pairs = [(lstar[t], lstar_d[dual_face(t, P, D)]) for t in P.faces(1)]
    genera = tuple(lstar_d[dual_face(v, P, D)] for v in P.faces(0))
    out = DualityCounts(
        l=s.l_total,
        l_dual=sd.l_total,
        n_vertices=s.f_vector[0],
        n_edges=s.f_vector[1],
        n_facets=s.f_vector[2],
        facets_lstar=sum(lstar[G] for G in P.faces(2)),
        edges_lstar=sum(a for a, _ in edge_pairs),
        dual_edges_lstar=sum(b for _, b in edge_pairs),
        edges_lstar_product=sum(a * b for a, b in edge_pairs),
        edges_shifted_product=sum((a + 1) * (b + 1) for a, b in edge_pairs),
        vertex_duals_lstar=sum(genera),
        volume=s.normalized_volume,
        volume_dual=sd.normalized_volume,
        vertex_genera=genera,
    )
    P.__dict__["_duality_counts"] = out
    return out
