"""Regenerate src/reflexive_mirror/data/corpus.txt (deterministic)."""
import sys
from pathlib import Path

from reflexive_mirror.corpus import hand_built, random_reflexive_subpolytopes
from reflexive_mirror.normal_form import is_self_dual, normal_form
from reflexive_mirror.pipeline import format_vertex_file
from reflexive_mirror.polytope import polar_dual

TARGET = 80
SEED = 7

out = Path(__file__).resolve().parents[1] / "src/reflexive_mirror/data/corpus.txt"

classes, seen = [], set()
for P in hand_built().values():
    for Q in (P, polar_dual(P)):
        if normal_form(Q) not in seen:
            seen.add(normal_form(Q))
            classes.append(Q)

sources = list(classes)
for P in random_reflexive_subpolytopes(sources, 400, seed=SEED):
    if len(classes) >= TARGET:
        break
    if normal_form(P) in seen:
        continue
    # keep every self-dual class found, fill the rest in order
    if is_self_dual(P) or len(classes) < TARGET - 2:
        seen.add(normal_form(P))
        classes.append(P)

header = (f"# {len(classes)} pairwise inequivalent reflexive 3-polytopes\n"
          f"# generated by scripts/build_corpus.py (seed {SEED})\n")
out.write_text(header + format_vertex_file(classes))
print(f"wrote {len(classes)} polytopes, "
      f"{sum(is_self_dual(P) for P in classes)} self-dual, to {out}", file=sys.stderr)
