import random

import pytest

import oracles
from conftest import transformed
from reflexive_mirror import NotReflexive, hull_from_points, polar_dual, verify_identities
from reflexive_mirror.counts import duality_counts

NAMES = {"volume", "volume_dual", "edge_sum_24", "sum_28", "dual_point_count",
         "euler", "euler_dual", "point_decomposition", "point_decomposition_dual"}


def test_cube_values(cube):
    report = verify_identities(cube, "cube")
    assert report.passed
    assert set(report.checks) == NAMES
    assert report.checks["volume"] == (48, 2 * 27 - 6)
    assert report.checks["edge_sum_24"] == (12 * (1 + 1) * (0 + 1), 24)
    assert report.checks["sum_28"] == (27 + 7 + 0 - 0 - 6, 28)


def test_simplex_volumes(simplex):
    report = verify_identities(simplex)
    assert report.checks["volume"] == (4, 2 * 5 - 6)
    assert report.checks["volume_dual"] == (64, 2 * 35 - 6)


def test_report_dict(example):
    d = verify_identities(example, 7).as_dict()
    assert d["id"] == 7 and d["passed"] is True
    assert d["checks"]["sum_28"] == {"lhs": 28, "rhs": 28, "pass": True}


def test_failures_listed():
    from reflexive_mirror.identities import Check, IdentityReport
    r = IdentityReport("x", {"a": Check(1, 1), "b": Check(1, 2)})
    assert not r.passed and r.failures() == ["b"]


def test_requires_reflexive():
    with pytest.raises(NotReflexive):
        verify_identities(hull_from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]))


def test_all_identities_on_corpus(corpus):
    for i, P in enumerate(corpus, 1):
        report = verify_identities(P, i)
        assert report.passed, (i, report.failures())


def test_identities_on_transformed_corpus(corpus):
    rng = random.Random(11)
    for P in corpus:
        assert verify_identities(transformed(P, rng)).passed


@pytest.mark.parametrize("index", range(0, 80, 7))
def test_counts_match_independent_census(corpus, index):
    P = corpus[index]
    c = duality_counts(P)
    ref = oracles.face_census(P.vertices)
    assert (c.l, c.l_dual, c.n_vertices, c.n_edges, c.n_facets) == (
        ref["l"], ref["l_dual"], ref["n_vertices"], ref["n_edges"], ref["n_facets"])
    assert c.facets_lstar == ref["facets_lstar"]
    assert c.edges_lstar == ref["edges_lstar"]
    assert c.dual_edges_lstar == ref["dual_edges_lstar"]
    assert c.edges_lstar_product == ref["edges_product"]
    assert c.edges_shifted_product == ref["edges_shifted_product"] == 24
    assert c.vertex_duals_lstar == ref["vertex_duals_lstar"]
    assert (c.volume, c.volume_dual) == (ref["volume"], ref["volume_dual"])


def test_dual_counts_are_swapped(corpus):
    for P in corpus[:30]:
        c, cd = duality_counts(P), duality_counts(polar_dual(P))
        assert (c.l, c.l_dual) == (cd.l_dual, cd.l)
        assert c.n_vertices == cd.n_facets and c.n_edges == cd.n_edges
        assert c.edges_lstar_product == cd.edges_lstar_product
