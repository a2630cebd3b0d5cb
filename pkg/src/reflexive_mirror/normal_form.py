"""
Canonical forms of reflexive 3-polytopes under GL(3, Z).

The vertex-facet pairing matrix  M[i][j] = u_i . v_j + c_i  (c_i = 1 for
reflexive polytopes) is unchanged by any lattice automorphism, so equivalent polytopes have pairing matrices that agree
up to row and column permutations.  We pick the lexicographically largest
such matrix (row-major), collect every column order that attains it, and
finish with the Hermite normal form of the correspondingly ordered vertex
matrix; the smallest HNF over those orders is the normal form.
"""
from __future__ import annotations

from .errors import NotReflexive
from .polytope import LatticePolytope, _dot, polar_dual

Matrix = tuple[tuple[int, ...], ...]


def hermite_normal_form(rows) -> Matrix:
    """Row-style Hermite normal form of an integer matrix.

    Returns H = U @ A for a unimodular U, with H in row echelon form, pivots
    positive and entries above each pivot reduced into [0, pivot).  Zero rows
    are kept at the bottom, so H has the shape of A.  H depends only on the
    row lattice of A.
    """
    A = [list(r) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    r = 0
    for c in range(n):
        if r == m:
            break
        # Euclid on column c among rows r..m-1
        while True:
            nz = [i for i in range(r, m) if A[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[piv] = A[piv], A[r]
            done = True
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    if A[i][c]:
                        done = False
            if done:
                break
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        p = A[r][c]
        for i in range(r):
            q = A[i][c] // p
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
        r += 1
    return tuple(tuple(row) for row in A)


def pairing_matrix(P: LatticePolytope) -> list[list[int]]:
    """Rows indexed by facets, columns by vertices; entries u . v + offset."""
    return [[_dot(f.normal, v) + f.offset for v in P.vertices] for f in P.facets]


def _optimal_column_orders(M):
    """All column orders under which some row order makes M lex-maximal.

    Rows are fixed greedily; the columns not yet separated by the chosen
    rows form ordered blocks, and the next row is sorted descending inside
    each block.  Every tie is carried forward.
    """
    nrows, ncols = len(M), len(M[0])
    # row order is irrelevant to the surviving column orders, so states
    # remember only which rows are used
    states = {(frozenset(), (tuple(range(ncols)),))}
    for _ in range(nrows):
        best = None
        winners = []
        for used, blocks in states:
            for r in range(nrows):
                if r in used:
                    continue
                row = M[r]
                key = []
                for block in blocks:
                    if len(block) == 1:
                        key.append(row[block[0]])
                    else:
                        key.extend(sorted([row[j] for j in block], reverse=True))
                if best is None or key > best:
                    best = key
                    winners = [(used, blocks, r)]
                elif key == best:
                    winners.append((used, blocks, r))
        states = {(used | {r}, _split(blocks, M[r])) for used, blocks, r in winners}
    orders = set()
    for _, blocks in states:
        assert all(len(b) == 1 for b in blocks), "distinct vertices must be separated"
        orders.add(tuple(b[0] for b in blocks))
    return sorted(orders)


def _split(blocks, row):
    out = []
    for block in blocks:
        if len(block) == 1:
            out.append(block)
            continue
        for value in sorted({row[j] for j in block}, reverse=True):
            out.append(tuple(j for j in block if row[j] == value))
    return tuple(out)


def canonical_vertices(P: LatticePolytope) -> Matrix:
    """Canonical vertex list of any polytope with the origin strictly
    inside.  Fixing the origin leaves only GL(3, Z) acting, and facet offsets
    need not be 1 for the pairing matrix to be invariant.
    """
    if not all(f.offset > 0 for f in P.facets):
        raise ValueError(f"{P!r} does not contain the origin in its interior")
    M = pairing_matrix(P)
    best = None
    for order in _optimal_column_orders(M):
        cols = [[P.vertices[j][i] for j in order] for i in range(3)]
        H = hermite_normal_form(cols)
        if best is None or H < best:
            best = H
    return tuple(zip(*best))


def normal_form(P: LatticePolytope) -> Matrix:
    """Canonical vertex list (one row per vertex) of a reflexive polytope.

    Two reflexive polytopes have equal normal forms iff some matrix in
    GL(3, Z) maps one onto the other.
    """
    if not P.is_reflexive:
        raise NotReflexive(f"{P!r} is not reflexive")
    cached = P.__dict__.get("_normal_form")
    if cached is None:
        cached = P.__dict__["_normal_form"] = canonical_vertices(P)
    return cached


def is_equivalent(P: LatticePolytope, Q: LatticePolytope) -> bool:
    return normal_form(P) == normal_form(Q)


def is_self_dual(P: LatticePolytope) -> bool:
    """True iff P is GL(3, Z)-equivalent to its polar dual."""
    return is_equivalent(P, polar_dual(P))


def normal_form_key(P: LatticePolytope) -> str:
    """Compact text serialization of `normal_form`, usable as a dict key."""
    return ";".join(",".join(str(x) for x in v) for v in normal_form(P))
