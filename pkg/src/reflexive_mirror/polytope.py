"""
Exact integer geometry for lattice 3-polytopes.

Everything here works on Python integers (and `fractions.Fraction` where a
non-lattice reference point is unavoidable), so no computation ever rounds.
Polytopes are immutable once built; derived data such as lattice points and
per-face counts are cached on the instance.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import gcd
from typing import Iterable, Sequence

from .errors import DegenerateInput, FaceNotOfPolytope, NotReflexive

Point = tuple[int, int, int]


# -- small vector helpers ---------------------------------------------------

def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _det3(a, b, c):
    return _dot(a, _cross(b, c))


def _primitive(v):
    g = gcd(*v)
    return tuple(c // g for c in v)


def _is_zero(v):
    return v[0] == 0 and v[1] == 0 and v[2] == 0


def _as_point(p) -> Point:
    if len(p) != 3:
        raise ValueError(f"expected 3 coordinates, got {len(p)}: {p!r}")
    out = []
    for c in p:
        if int(c) != c:
            raise ValueError(f"non-integral coordinate in {p!r}")
        out.append(int(c))
    return tuple(out)


# -- convex hull ------------------------------------------------------------

def _spanning_tetrahedron(points):
    """Return four affinely independent points, or None."""
    p0 = points[0]
    p1 = next((p for p in points if p != p0), None)
    if p1 is None:
        return None
    d1 = _sub(p1, p0)
    for p2 in points:
        n = _cross(d1, _sub(p2, p0))
        if not _is_zero(n):
            break
    else:
        return None
    for p3 in points:
        if _dot(n, _sub(p3, p0)) != 0:
            return p0, p1, p2, p3
    return None


def _pivot(a, b, ref, inward, points):
    """Rotate a supporting plane about the line ab until it hits the hull.

    `inward` is the inner normal of the current supporting plane through a
    and b, and `ref` a direction inside that plane, transverse to ab, pointing
    to the side where the polytope continues.  Returns the primitive inner
    normal of the next supporting plane around the axis.
    """
    t = _sub(b, a)
    c = next(p for p in points if _dot(inward, _sub(p, a)) > 0)
    w = _cross(t, _sub(c, a))
    if _dot(w, ref) < 0:
        w = (-w[0], -w[1], -w[2])
    for p in points:
        d = _sub(p, a)
        if _dot(inward, d) > 0 and _dot(w, d) < 0:
            w = _cross(t, d)
            if _dot(w, ref) < 0:
                w = (-w[0], -w[1], -w[2])
    return _primitive(w)


def _polygon_2d(points, normal):
    """Vertices of the convex polygon spanned by coplanar `points`, in cyclic
    order, with collinear boundary points dropped.
    """
    k = max(range(3), key=lambda i: abs(normal[i]))
    keep = [i for i in range(3) if i != k]
    proj = sorted({(p[keep[0]], p[keep[1]]): p for p in points}.items())

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for q, p in proj:
        while len(lower) >= 2 and turn(lower[-2][0], lower[-1][0], q) <= 0:
            lower.pop()
        lower.append((q, p))
    for q, p in reversed(proj):
        while len(upper) >= 2 and turn(upper[-2][0], upper[-1][0], q) <= 0:
            upper.pop()
        upper.append((q, p))
    return [p for _, p in lower[:-1] + upper[:-1]]


def _first_facet_normal(points):
    a = min(points)
    # 2D gift wrap in the xy-projection gives a vertical supporting plane
    # through a; a' is lexicographically minimal there as well.
    b = None
    for p in points:
        if (p[0], p[1]) == (a[0], a[1]):
            continue
        if b is None:
            b = p
            continue
        d = (b[0] - a[0], b[1] - a[1])
        q = (p[0] - a[0], p[1] - a[1])
        if d[0] * q[1] - d[1] * q[0] < 0:
            b = p
    d = (b[0] - a[0], b[1] - a[1])
    n1 = _primitive((-d[1], d[0], 0))
    on_plane = [p for p in points if _dot(n1, _sub(p, a)) == 0]
    if _spanning_triangle(on_plane) is not None:
        return n1
    t = _sub(b, a)
    return _pivot(a, b, _cross(t, n1), n1, points)


def _spanning_triangle(points):
    if len(points) < 3:
        return None
    p0 = points[0]
    for p1 in points:
        if p1 == p0:
            continue
        for p2 in points:
            if not _is_zero(_cross(_sub(p1, p0), _sub(p2, p0))):
                return p0, p1, p2
        return None
    return None


def _hull_facets(points):
    """Facets of conv(points) as {inner normal: cyclic vertex list}."""
    n0 = _first_facet_normal(points)
    facets = {}
    queue = [n0]
    while queue:
        n = queue.pop()
        if n in facets:
            continue
        level = min(_dot(n, p) for p in points)
        cycle = _polygon_2d([p for p in points if _dot(n, p) == level], n)
        facets[n] = cycle
        m = len(cycle)
        for i in range(m):
            a, b = cycle[i], cycle[(i + 1) % m]
            f = cycle[(i + 2) % m]
            # direction inside the facet, perpendicular to the edge
            ref = _cross(n, _sub(b, a))
            if _dot(ref, _sub(f, a)) < 0:
                ref = (-ref[0], -ref[1], -ref[2])
            nxt = _pivot(a, b, ref, n, points)
            if nxt not in facets:
                queue.append(nxt)
    return facets


# -- faces ------------------------------------------------------------------

@dataclass(frozen=True)
class Face:
    """A proper face of a polytope, identified by its vertex indices."""

    dim: int
    vertex_indices: frozenset
    parent: "LatticePolytope" = field(compare=False, repr=False)

    @property
    def vertices(self) -> list[Point]:
        return [self.parent.vertices[i] for i in sorted(self.vertex_indices)]

    def contains(self, other: "Face") -> bool:
        return other.vertex_indices <= self.vertex_indices


@dataclass(frozen=True)
class Facet:
    """Inequality normal . x >= -offset, tight exactly on `vertex_indices`."""

    normal: Point
    offset: int
    vertex_indices: frozenset
    cycle: tuple  # vertex indices in boundary order


@dataclass(frozen=True)
class FaceLattice:
    faces: tuple  # (vertices, edges, facets), each a tuple of Face
    incidence: dict  # Face -> frozenset of faces one dimension up

    def __getitem__(self, dim: int) -> tuple:
        return self.faces[dim]

    @property
    def f_vector(self) -> tuple[int, int, int]:
        return tuple(len(f) for f in self.faces)


@dataclass(frozen=True)
class PolytopeStats:
    l_total: int
    l_per_face: dict
    lstar_per_face: dict
    f_vector: tuple
    normalized_volume: int


class LatticePolytope:
    """Full-dimensional lattice polytope in Z^3.

    Build with `hull_from_points`; the constructor trusts its arguments.
    Vertices are kept in lexicographic order and facets sorted by normal, so
    two polytopes with the same vertex set compare (and hash) equal.
    """

    __slots__ = ("vertices", "facets", "__dict__")

    def __init__(self, vertices: tuple, facets: tuple):
        self.vertices = vertices
        self.facets = facets

    def __eq__(self, other):
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolytope({list(self.vertices)})"

    @cached_property
    def _vertex_index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def face_lattice(self) -> FaceLattice:
        verts = tuple(Face(0, frozenset([i]), self) for i in range(len(self.vertices)))
        edge_sets = set()
        for f in self.facets:
            cyc = f.cycle
            for i in range(len(cyc)):
                edge_sets.add(frozenset((cyc[i], cyc[(i + 1) % len(cyc)])))
        edges = tuple(Face(1, e, self) for e in sorted(edge_sets, key=sorted))
        facets = tuple(Face(2, f.vertex_indices, self) for f in self.facets)
        incidence = {}
        for v in verts:
            incidence[v] = frozenset(e for e in edges if v.vertex_indices <= e.vertex_indices)
        for e in edges:
            incidence[e] = frozenset(g for g in facets if e.vertex_indices <= g.vertex_indices)
        for g in facets:
            incidence[g] = frozenset()
        return FaceLattice((verts, edges, facets), incidence)

    def faces(self, dim: int) -> tuple:
        return self.face_lattice[dim]

    @property
    def f_vector(self) -> tuple[int, int, int]:
        return self.face_lattice.f_vector

    def facet_of(self, face: Face) -> Facet:
        assert face.dim == 2
        return self.facets[self.face_lattice[2].index(face)]

    def transform(self, matrix: Sequence[Sequence[int]]) -> "LatticePolytope":
        """Image under x -> matrix @ x.

        A unimodular matrix carries the face structure along: normals map by
        the inverse transpose and offsets are unchanged.  Any other matrix
        triggers a fresh hull.
        """
        M = [tuple(row) for row in matrix]
        image = [tuple(_dot(row, v) for row in M) for v in self.vertices]
        det = _det3(*M)
        if det not in (1, -1):
            return hull_from_points(image)
        # rows of the inverse are cross products of the columns of M, and a
        # normal n maps to n @ inverse
        cols = list(zip(*M))
        inv = [tuple(x * det for x in _cross(cols[(i + 1) % 3], cols[(i + 2) % 3]))
               for i in range(3)]
        order = sorted(range(len(image)), key=image.__getitem__)
        new_index = {old: new for new, old in enumerate(order)}
        facets = []
        for f in self.facets:
            normal = tuple(_dot(f.normal, col) for col in zip(*inv))
            cyc = tuple(new_index[i] for i in f.cycle)
            if det < 0:
                cyc = cyc[::-1]
            facets.append(Facet(normal, f.offset, frozenset(cyc), cyc))
        facets.sort(key=lambda f: f.normal)
        return LatticePolytope(tuple(image[i] for i in order), tuple(facets))

    @cached_property
    def is_reflexive(self) -> bool:
        return all(f.offset == 1 for f in self.facets)

    @cached_property
    def lattice_points(self) -> tuple:
        return tuple(_column_scan(self))

    @cached_property
    def stats(self) -> PolytopeStats:
        l_face, lstar_face = {}, {}
        for dim in range(3):
            for face in self.faces(dim):
                l_face[face], lstar_face[face] = face_point_counts(face)
        return PolytopeStats(
            l_total=len(self.lattice_points),
            l_per_face=l_face,
            lstar_per_face=lstar_face,
            f_vector=self.f_vector,
            normalized_volume=normalized_volume(self),
        )


def hull_from_points(points: Iterable[Sequence[int]]) -> LatticePolytope:
    """Convex hull of a finite set of lattice points in Z^3.

    Raises:
        DegenerateInput: the points do not span 3-space affinely.
    """
    pts = sorted({_as_point(p) for p in points})
    if not pts:
        raise DegenerateInput("empty point set")
    if _spanning_tetrahedron(pts) is None:
        raise DegenerateInput("points do not span a 3-dimensional affine space")

    raw = _hull_facets(pts)
    vertices = tuple(sorted({v for cyc in raw.values() for v in cyc}))
    index = {v: i for i, v in enumerate(vertices)}
    facets = []
    for normal in sorted(raw):
        cyc = tuple(index[v] for v in raw[normal])
        offset = -_dot(normal, vertices[cyc[0]])
        facets.append(Facet(normal, offset, frozenset(cyc), cyc))
    return LatticePolytope(vertices, tuple(facets))


def is_reflexive(P: LatticePolytope) -> bool:
    """True iff every primitive facet inequality reads u . x >= -1.

    That form already puts the origin strictly inside, and it is equivalent to
    the polar dual having integral vertices.
    """
    return P.is_reflexive


def _require_reflexive(P):
    if not P.is_reflexive:
        raise NotReflexive(f"{P!r} is not reflexive")


def polar_dual(P: LatticePolytope) -> LatticePolytope:
    """{u : u . v >= -1 for all v in P}; its vertices are P's facet normals."""
    _require_reflexive(P)
    D = P.__dict__.get("_dual")
    if D is None:
        D = hull_from_points([f.normal for f in P.facets])
        P.__dict__["_dual"] = D
        D.__dict__["_dual"] = P
    return D


# -- lattice points ---------------------------------------------------------

def _bbox(P):
    return [(min(v[i] for v in P.vertices), max(v[i] for v in P.vertices))
            for i in range(3)]


def _column_scan(P):
    """Lattice points by scanning (x, y) columns and solving for the z range."""
    (x0, x1), (y0, y1), _ = _bbox(P)
    ineqs = [(f.normal, f.offset) for f in P.facets]
    out = []
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            lo, hi = None, None
            for (a, b, c), off in ineqs:
                rhs = -off - a * x - b * y  # need c*z >= rhs
                if c > 0:
                    bound = -((-rhs) // c)
                    lo = bound if lo is None or bound > lo else lo
                elif c < 0:
                    bound = rhs // c
                    hi = bound if hi is None or bound < hi else hi
                elif rhs > 0:
                    lo, hi = 1, 0
                    break
            for z in range(lo, hi + 1):
                out.append((x, y, z))
    return out


def enumerate_lattice_points(P: LatticePolytope) -> list[Point]:
    """All integer points of P in lexicographic order."""
    return list(P.lattice_points)


def lattice_points_bruteforce(P: LatticePolytope) -> list[Point]:
    """Reference oracle: test every point of the bounding box."""
    ranges = [range(lo, hi + 1) for lo, hi in _bbox(P)]
    return [p for p in product(*ranges)
            if all(_dot(f.normal, p) >= -f.offset for f in P.facets)]


def _face_facets(face: Face):
    P = face.parent
    return [f for f in P.facets if face.vertex_indices <= f.vertex_indices]


def face_point_counts(F: Face) -> tuple[int, int]:
    """(l, l*) for a face: points on the closed face and in its relative
    interior.  A vertex counts as its own relative interior, giving (1, 1).

    Edges use the gcd of the edge vector; facets use Pick's theorem in the
    facet's own 2-dimensional lattice.
    """
    P = F.parent
    if F.dim == 0:
        return 1, 1
    if F.dim == 1:
        a, b = F.vertices
        g = gcd(*_sub(b, a))
        return g + 1, g - 1
    facet = P.facet_of(F)
    n = facet.normal
    cyc = [P.vertices[i] for i in facet.cycle]
    m = len(cyc)
    twice_area = 0
    boundary = 0
    for i in range(m):
        a, b = cyc[i], cyc[(i + 1) % m]
        twice_area += _dot(_cross(a, b), n)
        boundary += gcd(*_sub(b, a))
    # the plane lattice has covolume |n| for primitive n
    twice_area = abs(twice_area) // _dot(n, n)
    interior = (twice_area - boundary + 2) // 2
    return interior + boundary, interior


def face_point_counts_bruteforce(F: Face) -> tuple[int, int]:
    """Oracle for `face_point_counts` built on bounding-box enumeration.

    A lattice point of P lies in relint(F) iff the facets tight at it are
    exactly the facets containing F.
    """
    P = F.parent
    own = {f.normal for f in _face_facets(F)}
    closed = interior = 0
    for p in lattice_points_bruteforce(P):
        tight = {f.normal for f in P.facets if _dot(f.normal, p) == -f.offset}
        if own <= tight:
            closed += 1
            if tight == own:
                interior += 1
    return closed, interior


# -- duality of faces -------------------------------------------------------

def dual_face(F: Face, P: LatticePolytope, Pdual: LatticePolytope) -> Face:
    """The face of Pdual on which u . v = -1 for every v in F."""
    if F.parent is not P and F.parent != P:
        raise FaceNotOfPolytope(f"{F!r} is not a face of {P!r}")
    if F not in P.face_lattice.incidence:
        raise FaceNotOfPolytope(f"{F!r} is not a face of {P!r}")
    target = frozenset(Pdual._vertex_index[f.normal] for f in _face_facets(F))
    for G in Pdual.faces(2 - F.dim):
        if G.vertex_indices == target:
            return G
    raise FaceNotOfPolytope(f"{Pdual!r} has no face dual to {F!r}; is it the polar dual?")


# -- volume -----------------------------------------------------------------

def normalized_volume(P: LatticePolytope) -> int:
    """3! times the Euclidean volume, by coning facet fans from an interior
    point.  Independent of any lattice point count.
    """
    if all(f.offset > 0 for f in P.facets):
        c = (0, 0, 0)
        scale = 1
        verts = P.vertices
    else:
        # vertex centroid, scaled to stay integral
        n = len(P.vertices)
        c = tuple(sum(v[i] for v in P.vertices) for i in range(3))
        scale = n
        verts = tuple(tuple(n * x for x in v) for v in P.vertices)
    total = 0
    for f in P.facets:
        cyc = [_sub(verts[i], c) for i in f.cycle]
        for i in range(1, len(cyc) - 1):
            total += abs(_det3(cyc[0], cyc[i], cyc[i + 1]))
    vol = Fraction(total, scale ** 3)
    if vol.denominator != 1:
        raise AssertionError("normalized volume of a lattice polytope must be integral")
    return int(vol)
