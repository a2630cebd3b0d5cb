"""Built-in reflexive 3-polytopes (a few hand-built ones, a small test corpus
and the full census of classes), and helpers to grow test corpora: random
unimodular matrices and random reflexive subpolytopes.
"""
from __future__ import annotations

import random
from importlib import resources
from itertools import product

from .errors import DegenerateInput
from .normal_form import normal_form
from .polytope import LatticePolytope, hull_from_points, polar_dual

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)

HAND_BUILT = {
    "p3_simplex": [E1, E2, E3, (-1, -1, -1)],
    "example_simplex": [E1, E2, E3, (-4, -4, -3)],
    "cube": list(product((-1, 1), repeat=3)),
    "octahedron": [E1, E2, E3, (-1, 0, 0), (0, -1, 0), (0, 0, -1)],
    "p2_x_p1": [E1, E2, (-1, -1, 0), (1, 0, 1), (0, 1, 1), (-1, -1, 1),
                (1, 0, -1), (0, 1, -1), (-1, -1, -1)],
    "p2_x_p1_fan": [E1, E2, (-1, -1, 0), E3, (0, 0, -1)],
    "p1_cubed_blowup": [E1, E2, E3, (-1, 0, 0), (0, -1, 0), (0, 0, -1), (1, 1, 1)],
    "weighted_1113": [E1, E2, E3, (-1, -1, -3)],
    "weighted_1122": [E1, E2, E3, (-1, -2, -2)],
    "weighted_1146": [E1, E2, E3, (-1, -4, -6)],
}


def hand_built() -> dict[str, LatticePolytope]:
    return {name: hull_from_points(pts) for name, pts in HAND_BUILT.items()}


def _load(name):
    from .pipeline import parse_vertex_file
    return parse_vertex_file(resources.files(__package__).joinpath(name).read_text())


def load_corpus() -> list[LatticePolytope]:
    """The bundled corpus: pairwise inequivalent reflexive polytopes."""
    return _load("data/corpus.txt")


def load_census() -> list[LatticePolytope]:
    """One representative, in normal form, of every reflexive 3-polytope
    class (generated by scripts/enumerate_reflexive.py)."""
    return _load("data/reflexive3_all.txt")


def random_unimodular(rng: random.Random, steps: int = 6, bound: int = 2) -> list[list[int]]:
    """Product of random elementary matrices, a signed permutation on top.

    Entries stay small for small `steps` and `bound`; det is always +-1.
    """
    M = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(steps):
        i, j = rng.sample(range(3), 2)
        k = rng.choice([m for m in range(-bound, bound + 1) if m])
        M[i] = [a + k * b for a, b in zip(M[i], M[j])]
    rng.shuffle(M)
    for row in M:
        if rng.random() < 0.5:
            row[:] = [-x for x in row]
    return M


def random_reflexive_subpolytopes(sources, count: int, seed: int = 0,
                                  max_tries: int = 200_000) -> list[LatticePolytope]:
    """Inequivalent reflexive polytopes spanned by random subsets of the
    lattice points of `sources`, together with their duals."""
    rng = random.Random(seed)
    pools = [[p for p in S.lattice_points if any(p)] for S in sources]
    seen, found = set(), []

    def add(P):
        key = normal_form(P)
        if key not in seen:
            seen.add(key)
            found.append(P)

    for _ in range(max_tries):
        if len(found) >= count:
            break
        pool = rng.choice(pools)
        k = rng.randint(4, min(9, len(pool)))
        try:
            P = hull_from_points(rng.sample(pool, k))
        except DegenerateInput:
            continue
        if not P.is_reflexive:
            continue
        add(P)
        add(polar_dual(P))
    return found[:count]
