"""
Batch processing: vertex-file ingestion, per-polytope records, dedup and
self-dual census, and table emission.
"""
from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, TextIO, Union

from .errors import (DegenerateInput, InternalTheoremViolation, NotReflexive,
                     ParseError)
from .hodge import (HodgePair, XInvariants, YInvariants, mirror_check_xi,
                    mirror_check_z, x_invariants, xi_hodge, y_invariants,
                    z_hodge)
from .identities import verify_identities
from .normal_form import normal_form_key
from .polytope import LatticePolytope, hull_from_points, polar_dual

log = logging.getLogger(__name__)

MIN_VERTICES, MAX_VERTICES = 4, 14


# -- vertex files -----------------------------------------------------------

def _read_text(stream) -> str:
    if isinstance(stream, str):
        return stream
    if isinstance(stream, (bytes, bytearray)):
        return stream.decode()
    data = stream.read()
    return data.decode() if isinstance(data, (bytes, bytearray)) else data


def parse_vertex_file(stream: Union[str, bytes, TextIO]) -> list[LatticePolytope]:
    """Parse blocks of the form

        3 4  optional annotations
        1 0 0 -4
        0 1 0 -4
        0 0 1 -3

    The header gives the matrix shape; one dimension must be 3 and the other
    the vertex count, which also fixes whether vertices are columns or rows.
    Blank lines and lines starting with '#' are skipped.
    """
    lines = [(no, raw.split()) for no, raw in enumerate(_read_text(stream).splitlines(), 1)
             if raw.strip() and not raw.lstrip().startswith("#")]
    polytopes = []
    pos = 0
    while pos < len(lines):
        no, tokens = lines[pos]
        try:
            r, c = int(tokens[0]), int(tokens[1])
        except (IndexError, ValueError):
            raise ParseError(f"expected a header 'rows cols', got {' '.join(tokens)!r}", no)
        if r == 3 and MIN_VERTICES <= c <= MAX_VERTICES:
            by_columns = True
        elif c == 3 and MIN_VERTICES <= r <= MAX_VERTICES:
            by_columns = False
        else:
            raise ParseError(f"bad matrix shape {r} x {c}: need 3 x n or n x 3 with "
                             f"{MIN_VERTICES} <= n <= {MAX_VERTICES}", no)
        if pos + r >= len(lines):
            raise ParseError(f"block truncated: expected {r} rows", no)
        rows = []
        for k in range(1, r + 1):
            row_no, row = lines[pos + k]
            if len(row) != c:
                raise ParseError(f"expected {c} integers, got {len(row)}", row_no)
            try:
                rows.append([int(t) for t in row])
            except ValueError:
                raise ParseError(f"non-integer entry in {' '.join(row)!r}", row_no)
        points = list(zip(*rows)) if by_columns else rows
        try:
            polytopes.append(hull_from_points(points))
        except DegenerateInput as exc:
            raise DegenerateInput(f"block {len(polytopes)} (line {no}): {exc}") from exc
        pos += r + 1
    return polytopes


def format_vertex_file(polytopes: Iterable[LatticePolytope]) -> str:
    """Inverse of `parse_vertex_file`, vertices as columns."""
    out = []
    for P in polytopes:
        out.append(f"3 {len(P.vertices)}")
        for i in range(3):
            out.append(" ".join(str(v[i]) for v in P.vertices))
    return "\n".join(out) + ("\n" if out else "")


# -- records ----------------------------------------------------------------

def _stats_summary(P: LatticePolytope) -> dict:
    s = P.stats
    return {
        "l": s.l_total,
        "f_vector": list(s.f_vector),
        "normalized_volume": s.normalized_volume,
        "faces": [
            {"dim": F.dim, "vertices": [list(v) for v in F.vertices],
             "l": s.l_per_face[F], "lstar": s.lstar_per_face[F]}
            for dim in range(3) for F in P.faces(dim)
        ],
    }


@dataclass
class PolytopeRecord:
    id: int
    vertices: tuple
    normal_form_key: str = ""
    dual_normal_form_key: str = ""
    stats: dict = field(default_factory=dict, repr=False)
    x_inv: Optional[XInvariants] = None
    y_inv: Optional[YInvariants] = None       # Y built from the polytope itself
    y_inv_dual: Optional[YInvariants] = None  # Y built from the polar dual
    hodge_xi_x: Optional[HodgePair] = None
    hodge_xi_y: Optional[HodgePair] = None
    hodge_z: Optional[HodgePair] = None
    hodge_z_dual: Optional[HodgePair] = None
    self_dual: bool = False
    identity_pass: bool = False
    mirror_pass: bool = False
    error: Optional[str] = None
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.error is None


def compute_record(index: int, P: LatticePolytope) -> PolytopeRecord:
    """All invariants and theorem checks for one polytope.

    Raises NotReflexive; theorem failures are recorded, not raised.
    """
    if not P.is_reflexive:
        raise NotReflexive(f"polytope {index} is not reflexive")
    D = polar_dual(P)
    ident = verify_identities(P, index)
    mx, mz = mirror_check_xi(P), mirror_check_z(P)
    key, dual_key = normal_form_key(P), normal_form_key(D)
    return PolytopeRecord(
        id=index,
        vertices=P.vertices,
        normal_form_key=key,
        dual_normal_form_key=dual_key,
        stats={"polytope": _stats_summary(P), "dual": _stats_summary(D)},
        x_inv=x_invariants(P),
        y_inv=y_invariants(P),
        y_inv_dual=y_invariants(D),
        hodge_xi_x=xi_hodge(x_invariants(P)),
        hodge_xi_y=xi_hodge(y_invariants(D)),
        hodge_z=z_hodge(P),
        hodge_z_dual=z_hodge(D),
        self_dual=key == dual_key,
        identity_pass=ident.passed,
        mirror_pass=mx.passed and mz.passed,
        failures=ident.failures() + mx.failures() + mz.failures(),
    )


def _worker(args):
    index, vertices, lenient = args
    P = hull_from_points(vertices)
    try:
        return compute_record(index, P)
    except NotReflexive as exc:
        if not lenient:
            raise
        return PolytopeRecord(id=index, vertices=P.vertices, error=str(exc))


def batch_compute(polytopes: Iterable[LatticePolytope], jobs: int = 1,
                  lenient: bool = False) -> list[PolytopeRecord]:
    """Records in input order.  Ids are 1-based input positions.

    Non-reflexive inputs abort unless `lenient`, in which case they yield a
    record carrying the error.  A failed identity or mirror check always
    raises InternalTheoremViolation.
    """
    tasks = [(i, P.vertices, lenient) for i, P in enumerate(polytopes, 1)]
    if jobs and jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_worker, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        records = [_worker(t) for t in tasks]
    for rec in records:
        if rec.ok and not (rec.identity_pass and rec.mirror_pass):
            raise InternalTheoremViolation(
                f"polytope {rec.id} {list(rec.vertices)} failed: {', '.join(rec.failures)}")
    return records


# -- classification ---------------------------------------------------------

@dataclass
class Classification:
    n_inputs: int
    classes: dict          # normal form key -> list of record ids
    dual_of: dict          # normal form key -> dual normal form key
    self_dual: list        # keys of self-dual classes

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def n_duplicates(self) -> int:
        return self.n_inputs - self.n_classes

    def as_dict(self) -> dict:
        keys = list(self.classes)
        number = {k: i for i, k in enumerate(keys, 1)}
        return {
            "inputs": self.n_inputs,
            "classes": self.n_classes,
            "duplicates": self.n_duplicates,
            "self_dual_classes": len(self.self_dual),
            "class_list": [
                {
                    "class": number[k],
                    "normal_form": k,
                    "members": self.classes[k],
                    "self_dual": k in self.self_dual,
                    "dual_class": number.get(self.dual_of[k]),
                    "dual_normal_form": self.dual_of[k],
                }
                for k in keys
            ],
        }


def classify(records: Iterable[PolytopeRecord]) -> Classification:
    """Group records by normal form and pair each class with its dual class.
    Classes are numbered by first appearance."""
    classes, dual_of = {}, {}
    n = 0
    for rec in records:
        if not rec.ok:
            continue
        n += 1
        classes.setdefault(rec.normal_form_key, []).append(rec.id)
        dual_of[rec.normal_form_key] = rec.dual_normal_form_key
    self_dual = [k for k in classes if dual_of[k] == k]
    return Classification(n, classes, dual_of, self_dual)


# -- tables -----------------------------------------------------------------

TABLE_FIELDS = {
    "table1": ("id", "alpha_x", "alpha_y", "h11_xi_x", "h12_xi_x", "h11_xi_y", "h12_xi_y"),
    "table2": ("id", "self_dual", "h11_z", "h12_z", "h11_z_dual", "h12_z_dual"),
}


def table_rows(records: Iterable[PolytopeRecord], which: str) -> list[dict]:
    which = _table_name(which)
    rows = []
    for r in records:
        if not r.ok:
            continue
        if which == "table1":
            values = (r.id, r.x_inv.alpha, r.y_inv_dual.alpha,
                      r.hodge_xi_x.h11, r.hodge_xi_x.h12,
                      r.hodge_xi_y.h11, r.hodge_xi_y.h12)
        else:
            values = (r.id, r.self_dual, r.hodge_z.h11, r.hodge_z.h12,
                      r.hodge_z_dual.h11, r.hodge_z_dual.h12)
        rows.append(dict(zip(TABLE_FIELDS[which], values)))
    return rows


def _table_name(which) -> str:
    name = str(which)
    name = {"1": "table1", "2": "table2"}.get(name, name)
    if name not in TABLE_FIELDS:
        raise ValueError(f"unknown table {which!r}")
    return name


def emit_table(records: Iterable[PolytopeRecord], format: str = "csv",
               which: str = "table1") -> bytes:
    """Serialize table rows as CSV (fixed header) or a JSON array."""
    which = _table_name(which)
    rows = table_rows(records, which)
    if format == "json":
        return (json.dumps(rows, indent=2) + "\n").encode()
    if format != "csv":
        raise ValueError(f"unknown format {format!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_FIELDS[which])
    for row in rows:
        writer.writerow(str(v).lower() if isinstance(v, bool) else v for v in row.values())
    return buf.getvalue().encode()
