"""
Quasi-Fano invariants and Calabi-Yau Hodge numbers from reflexive polytopes.

For a reflexive 3-polytope P two quasi-Fano threefolds are built from the
toric variety of a maximal crepant resolution: X_P (one blow-up along a
curve in the anticanonical K3) and Y_P (sequential blow-ups along all the
boundary curves cut out on the K3).  Gluing two such threefolds along their
common K3 and smoothing gives a Calabi-Yau threefold whose Hodge numbers
depend only on lattice point counts of P and its polar dual.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .counts import duality_counts
from .errors import InvalidInvariants, NotReflexive
from .identities import Check
from .normal_form import is_self_dual
from .polytope import LatticePolytope, polar_dual


@dataclass(frozen=True)
class XInvariants:
    """Betti numbers h2, h3 of X_P and the rank alpha of Pic(X) restricted
    to the anticanonical K3."""

    h2: int
    h3: int
    alpha: int

    @property
    def h12(self) -> int:
        return self.h3 // 2


@dataclass(frozen=True)
class YInvariants:
    h2: int
    h3: int
    alpha: int
    k: int  # number of curves blown up
    vertex_genera: dict = field(compare=False)  # vertex -> genus of its curve

    @property
    def h12(self) -> int:
        return self.h3 // 2


Invariants = Union[XInvariants, YInvariants]


@dataclass(frozen=True)
class HodgePair:
    h11: int
    h12: int

    @property
    def euler(self) -> int:
        return euler_characteristic(self)

    def as_tuple(self) -> tuple[int, int]:
        return (self.h11, self.h12)


@dataclass
class MirrorReport:
    checks: dict = field(default_factory=dict)  # name -> Check
    pairs: dict = field(default_factory=dict)   # label -> HodgePair

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, c in self.checks.items() if not c.passed]

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "pairs": {k: list(p.as_tuple()) for k, p in self.pairs.items()},
            "checks": {name: {"lhs": c.lhs, "rhs": c.rhs, "pass": c.passed}
                       for name, c in self.checks.items()},
        }


def _require_reflexive(P):
    if not P.is_reflexive:
        raise NotReflexive(f"{P!r} is not reflexive")


def x_invariants(P: LatticePolytope) -> XInvariants:
    """h2 = l(P) - 3, h3 = 3! vol(P°) + 2, alpha = l(P) - sum_G l*(G) - 4."""
    _require_reflexive(P)
    c = duality_counts(P)
    return XInvariants(
        h2=c.l - 3,
        h3=c.volume_dual + 2,
        alpha=c.l - c.facets_lstar - 4,
    )


def y_invariants(P: LatticePolytope) -> YInvariants:
    """Invariants of the sequential blow-up Y_P, all faces taken in P and
    their duals in P°.

    Each vertex v contributes one curve of genus l*(v°); every interior
    lattice point of an edge t contributes l*(t°) + 1 rational curves.
    """
    _require_reflexive(P)
    c = duality_counts(P)
    k = c.n_vertices + c.edges_lstar_product + c.edges_lstar
    return YInvariants(
        h2=c.l - 4 + k,
        h3=2 * c.vertex_duals_lstar,
        alpha=c.l - c.facets_lstar - 4 + c.edges_lstar_product,
        k=k,
        vertex_genera=dict(zip(P.vertices, c.vertex_genera)),
    )


def _checked_pair(h11, h12):
    if h11 < 1 or h12 < 0:
        raise InvalidInvariants(f"impossible Hodge numbers h11={h11}, h12={h12}")
    return HodgePair(h11, h12)


def xi_hodge(q: Invariants) -> HodgePair:
    """Hodge numbers of the smoothing of two glued copies of one threefold."""
    return _checked_pair(2 * q.h2 - 1 - q.alpha, 21 + q.h3 - q.alpha)


def smoothing_hodge(h11_1: int, h12_1: int, h11_2: int, h12_2: int,
                    alpha_joint: int) -> HodgePair:
    """Hodge numbers of the Calabi-Yau smoothing of X1 glued to X2 along a
    common anticanonical K3, where `alpha_joint` is the rank of the sum of
    the two restricted Picard lattices.
    """
    if alpha_joint < 1:
        raise InvalidInvariants(f"alpha_joint must be positive, got {alpha_joint}")
    return _checked_pair(h11_1 + h11_2 - alpha_joint - 1,
                         21 + h12_1 + h12_2 - alpha_joint)


def z_hodge(P: LatticePolytope) -> HodgePair:
    """Hodge numbers of the smoothing of X_P glued to Y_P, in closed form."""
    _require_reflexive(P)
    c = duality_counts(P)
    h11 = c.l + c.n_vertices + c.edges_lstar + c.facets_lstar - 4
    h12 = (23 - c.l + c.l_dual + c.vertex_duals_lstar + c.facets_lstar
           - c.edges_lstar_product)
    return _checked_pair(h11, h12)


def z_hodge_via_smoothing(P: LatticePolytope) -> HodgePair:
    """Same numbers as `z_hodge`, routed through `smoothing_hodge`.

    Pic of X_P restricted to the K3 sits inside that of Y_P, so the joint
    rank is alpha of Y_P.
    """
    x, y = x_invariants(P), y_invariants(P)
    return smoothing_hodge(x.h2, x.h12, y.h2, y.h12, y.alpha)


def euler_characteristic(p: HodgePair) -> int:
    return 2 * (p.h11 - p.h12)


def quasi_fano_mirror_predicate(qX: Invariants, qY: Invariants) -> MirrorReport:
    """Rank-level test of the quasi-Fano mirror conditions.

    Only the two alpha equations and the rank sum 20 are checked; whether
    the restricted Picard lattices actually form a K3-mirror pair is not.
    """
    return MirrorReport(checks={
        "alpha_x": Check(qX.alpha, qX.h2 - qY.h12 - 1),
        "alpha_y": Check(qY.alpha, qY.h2 - qX.h12 - 1),
        "alpha_sum": Check(qX.alpha + qY.alpha, 20),
    })


def k3_lattice_mirror_predicate(qX: Invariants, qY: Invariants):
    """Lattice-level mirror condition on the restricted Picard lattices.

    Needs the lattices with their bilinear forms, not just ranks, and no
    algorithm for them is available here; use
    `quasi_fano_mirror_predicate` for the rank-level consequences.
    """
    raise NotImplementedError("only the rank-level mirror predicate is implemented")


def mirror_check_xi(P: LatticePolytope) -> MirrorReport:
    """Compare Xi(X_P) against Xi(Y_P°)."""
    _require_reflexive(P)
    qx, qy = x_invariants(P), y_invariants(polar_dual(P))
    hx, hy = xi_hodge(qx), xi_hodge(qy)
    report = quasi_fano_mirror_predicate(qx, qy)
    report.pairs = {"xi_x": hx, "xi_y": hy}
    report.checks.update({
        "h11_x_eq_h12_y": Check(hx.h11, hy.h12),
        "h12_x_eq_h11_y": Check(hx.h12, hy.h11),
        "euler_flip": Check(hx.euler, -hy.euler),
    })
    return report


def mirror_check_z(P: LatticePolytope) -> MirrorReport:
    """Compare M(Z_P) against M(Z_P°), via both the closed form and the
    smoothing formula.  For self-dual P the two sides must coincide.
    """
    _require_reflexive(P)
    D = polar_dual(P)
    z, zd = z_hodge(P), z_hodge(D)
    zs, zds = z_hodge_via_smoothing(P), z_hodge_via_smoothing(D)
    report = MirrorReport(pairs={"z": z, "z_dual": zd})
    report.checks.update({
        "h11_eq_dual_h12": Check(z.h11, zd.h12),
        "h12_eq_dual_h11": Check(z.h12, zd.h11),
        "smoothing_h11": Check(z.h11, zs.h11),
        "smoothing_h12": Check(z.h12, zs.h12),
        "smoothing_dual_h11": Check(zd.h11, zds.h11),
        "smoothing_dual_h12": Check(zd.h12, zds.h12),
    })
    if is_self_dual(P):
        report.checks["self_mirror_h11"] = Check(z.h11, zd.h11)
        report.checks["self_mirror_h12"] = Check(z.h12, zd.h12)
    return report
