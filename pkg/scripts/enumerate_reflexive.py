"""Enumerate every reflexive 3-polytope up to GL(3, Z) and write
src/reflexive_mirror/data/reflexive3_all.txt.

Walk downwards from the dual of the P^3 simplex: from each polytope with the
origin strictly inside, drop one vertex and take the hull of the remaining
lattice points, keeping the result if the origin is still interior.  Every
reflexive polytope met this way also contributes its dual as a new starting
point.  Classes are deduplicated by canonical vertex list.

Slow: about 665,000 classes are visited, roughly 1.5 hours on one core.
"""
import sys
import time
from pathlib import Path

from reflexive_mirror.errors import DegenerateInput
from reflexive_mirror.normal_form import canonical_vertices, is_self_dual, normal_form
from reflexive_mirror.pipeline import format_vertex_file
from reflexive_mirror.polytope import hull_from_points, polar_dual

out = Path(__file__).resolve().parents[1] / "src/reflexive_mirror/data/reflexive3_all.txt"

seen, reflexive, stack = set(), [], []


def push(P):
    key = canonical_vertices(P)
    if key in seen:
        return
    seen.add(key)
    stack.append(P)
    if P.is_reflexive:
        reflexive.append(P)


start = time.time()
done = 0
push(polar_dual(hull_from_points([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])))
while stack:
    P = stack.pop()
    done += 1
    if P.is_reflexive:
        push(polar_dual(P))
    points = P.lattice_points
    for v in P.vertices:
        try:
            Q = hull_from_points([p for p in points if p != v])
        except DegenerateInput:
            continue
        if all(f.offset > 0 for f in Q.facets):
            push(Q)
    if done % 20000 == 0:
        print(f"{done} visited, {len(reflexive)} reflexive, "
              f"{time.time() - start:.0f}s", file=sys.stderr)

classes = sorted((hull_from_points(normal_form(P)) for P in reflexive),
                 key=lambda P: (len(P.lattice_points), len(P.vertices), normal_form(P)))
n_self_dual = sum(is_self_dual(P) for P in classes)
header = (f"# {len(classes)} reflexive 3-polytopes, one per GL(3,Z) class, "
          f"{n_self_dual} self-dual\n"
          f"# vertices in normal form; generated by scripts/enumerate_reflexive.py\n")
out.write_text(header + format_vertex_file(classes))
print(f"wrote {len(classes)} classes ({n_self_dual} self-dual) to {out}, "
      f"{len(seen)} interior-point classes visited", file=sys.stderr)
