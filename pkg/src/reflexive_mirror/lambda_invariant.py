"""
The lambda invariant of a Calabi-Yau threefold with b2 = 2.

If c2 pairs non-trivially with the free part of H^2, the classes it kills
form a rank-1 subgroup generated by some m, and |m^3| is a homeomorphism
invariant.  This module evaluates it for the smoothing of two copies of the
blow-up of P^3 along a (4,4) complete-intersection curve, and compares the
result with the known values for toric hypersurfaces with the same Hodge
numbers (2, 86).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ZeroChernFunctional

# lambda of the ten toric-hypersurface threefolds with (h11, h12) = (2, 86),
# keyed by the reflexive 4-polytope ID in the toric Calabi-Yau database.
TOROIDAL_REFERENCE = (
    (12, 1404), (13, 108), (13, 1564), (14, 3456), (15, 17280),
    (16, 17946), (17, 137214), (18, 67230), (19, 258198), (20, 457050),
)

# c(P^3) = (1 + H)^4
P3_C2_DOT_H = 6


def _trilinear(coeffs, u, v, w):
    """Symmetric trilinear form on Z^2 whose cubic coefficients are
    (e1^3, e1^2 e2, e1 e2^2, e2^3)."""
    total = 0
    for i, ui in enumerate(u):
        for j, vj in enumerate(v):
            for k, wk in enumerate(w):
                total += ui * vj * wk * coeffs[i + j + k]
    return total


@dataclass(frozen=True)
class CubicLattice2:
    """Rank-2 lattice with basis (h1, h2), a symmetric cubic form and a
    linear functional c2."""

    cubic: tuple[int, int, int, int]  # h1^3, h1^2 h2, h1 h2^2, h2^3
    c2_pairing: tuple[int, int]       # c2.h1, c2.h2
    basis_labels: tuple[str, str] = ("h1", "h2")

    def cube(self, a: int, b: int) -> int:
        c30, c21, c12, c03 = self.cubic
        return a**3 * c30 + 3 * a * a * b * c21 + 3 * a * b * b * c12 + b**3 * c03

    def c2(self, a: int, b: int) -> int:
        return a * self.c2_pairing[0] + b * self.c2_pairing[1]

    def change_basis(self, U) -> "CubicLattice2":
        """Re-express in the basis h1' = U00 h1 + U01 h2, h2' = U10 h1 + U11 h2."""
        e1, e2 = tuple(U[0]), tuple(U[1])
        c = self.cubic
        return CubicLattice2(
            cubic=(_trilinear(c, e1, e1, e1), _trilinear(c, e1, e1, e2),
                   _trilinear(c, e1, e2, e2), _trilinear(c, e2, e2, e2)),
            c2_pairing=(self.c2(*e1), self.c2(*e2)),
            basis_labels=self.basis_labels,
        )


def blowup_intersection_data(degree: int, genus: int) -> tuple[int, int, int, int]:
    """Triple intersections (H^3, H^2 E, H E^2, E^3) on the blow-up of P^3
    along a smooth curve, H pulled back from a hyperplane and E exceptional.
    """
    if degree < 1 or genus < 0:
        raise ValueError(f"need degree >= 1 and genus >= 0, got ({degree}, {genus})")
    k_dot_c = -4 * degree
    return 1, 0, -degree, k_dot_c + 2 - 2 * genus


def blowup_c2_data(degree: int) -> tuple[int, int]:
    """(c2.H, c2.E) on the same blow-up.

    From c2 = pi^*(c2(P^3) + [C]) - pi^*(c1(P^3)) E one gets
    c2.H = 6 + deg C and c2.E = -K.C = 4 deg C.
    """
    if degree < 1:
        raise ValueError(f"need degree >= 1, got {degree}")
    return P3_C2_DOT_H + degree, 4 * degree


def quartic_k3_curve(multiple: int = 4) -> tuple[int, int]:
    """(degree, genus) of a smooth curve in |multiple * H| on a quartic K3."""
    self_int = multiple * multiple * 4
    return 4 * multiple, self_int // 2 + 1


def xi_p3_cubic_lattice() -> CubicLattice2:
    """Cubic form and c2 on <h1, h2> for the smoothing of X u_D X, where X
    is P^3 blown up along an anticanonical curve of a quartic K3.

    h1 = (H, H) and h2 = (4H - E, 0); products on the glued pair are the sums
    of componentwise products, mixed terms being zero.
    """
    degree, genus = quartic_k3_curve()
    on_x = blowup_intersection_data(degree, genus)
    c2h, c2e = blowup_c2_data(degree)

    # classes on one component as (coefficient of H, coefficient of E)
    H, G = (1, 0), (4, -1)  # G = 4H - E
    cubic = (
        2 * _trilinear(on_x, H, H, H),
        _trilinear(on_x, H, H, G),
        _trilinear(on_x, H, G, G),
        _trilinear(on_x, G, G, G),
    )
    c2_h1 = 2 * c2h
    c2_h2 = 4 * c2h - c2e
    return CubicLattice2(cubic=cubic, c2_pairing=(c2_h1, c2_h2))


def kernel_generator(L: CubicLattice2) -> tuple[int, int]:
    """Primitive generator of the classes killed by c2, first nonzero
    coordinate positive."""
    x, y = L.c2_pairing
    if x == 0 and y == 0:
        raise ZeroChernFunctional("c2 pairs to zero with both basis classes")
    g = gcd(x, y)
    a, b = y // g, -x // g
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return a, b


def lambda_invariant(L: CubicLattice2) -> int:
    a, b = kernel_generator(L)
    return abs(L.cube(a, b))


def compare_reference(lam: int) -> dict:
    matches = [pid for pid, ref in TOROIDAL_REFERENCE if ref == lam]
    return {
        "lambda": lam,
        "reference": [{"id": pid, "lambda": ref} for pid, ref in TOROIDAL_REFERENCE],
        "matches": matches,
        "distinct_from_all": not matches,
    }


def p3_derivation() -> dict:
    """Every intermediate quantity of the P^3 computation, for display."""
    degree, genus = quartic_k3_curve()
    L = xi_p3_cubic_lattice()
    m = kernel_generator(L)
    lam = lambda_invariant(L)
    return {
        "curve": {"degree": degree, "genus": genus},
        "blowup_intersections": dict(zip(("HHH", "HHE", "HEE", "EEE"),
                                         blowup_intersection_data(degree, genus))),
        "cubic": dict(zip(("h1^3", "h1^2h2", "h1h2^2", "h2^3"), L.cubic)),
        "c2_pairing": list(L.c2_pairing),
        "kernel_generator": list(m),
        "m_cubed": L.cube(*m),
        "lambda": lam,
        "comparison": compare_reference(lam),
    }
