"""Grids, torus multiplicities, admissible weight sets and folding."""

import itertools
from fractions import Fraction

import numpy as np
import pytest

import orbitfn as o

import reference_data as rd

ALGS = o.ALGEBRAS


def _specs(name, upto):
    nf = len(o.cartan(name).factors)
    return list(itertools.product(range(1, upto + 1), repeat=nf))


def _index_set(name, spec, family="C"):
    return {p.indices for p in o.grid_points(name, spec, family)}


# -- counts and published examples ------------------------------------------------


@pytest.mark.parametrize("name", ALGS)
def test_grid_count_matches_enumeration(name):
    for spec in _specs(name, 6 if len(o.cartan(name).factors) < 3 else 4):
        assert o.grid_count(name, spec) == len(o.grid_points(name, spec, "C"))
    if len(o.cartan(name).factors) == 1:
        for m in (7, 8):
            assert o.grid_count(name, (m,)) == len(o.grid_points(name, (m,), "C"))


def test_published_grid_examples():
    for (name, spec), expect in rd.GRID_EXAMPLES.items():
        assert _index_set(name, spec) == expect


def test_a1a1a1_refinement_extra_points():
    # even first indices of F_{2,1,3} are the F_{1,1,3} points; 8 more are new
    fine = _index_set("A1xA1xA1", (2, 1, 3))
    doubled = {(2 * s1, s2, s3) for (s1, s2, s3) in _index_set("A1xA1xA1", (1, 1, 3))}
    assert doubled <= fine
    assert fine - doubled == rd.A1A1A1_EXTRA_213
    assert len(fine - doubled) == 8


def test_b3_c3_f4_counts_and_published_table():
    assert o.grid_count("B3", (4,)) == 14
    assert o.grid_count("C3", (4,)) == 14
    # the published F_4 table in the B3 subsection satisfies the C3 constraint
    # and reproduces the enumerated C3 grid exactly
    assert rd.PUBLISHED_B3_F4_TABLE == _index_set("C3", (4,))
    # every enumerated B3 point satisfies B3's own constraint
    for s in _index_set("B3", (4,)):
        assert s[0] + 2 * s[1] + 2 * s[2] <= 4


def test_grid_nesting_on_divisors():
    # F_{M2} subset F_{M1} when the densities divide componentwise
    for name, fine, coarse in [
        ("A1xA1xA1", (4, 2, 6), (2, 1, 3)),
        ("A2xA1", (4, 6), (2, 3)),
        ("G2xA1", (6, 4), (3, 2)),
        ("A3", (6,), (3,)),
        ("C3", (8,), (4,)),
    ]:
        fine_pts = {p.coords for p in o.grid_points(name, fine, "C")}
        coarse_pts = {p.coords for p in o.grid_points(name, coarse, "C")}
        assert coarse_pts <= fine_pts


def test_g2a1_grid_intersection_content():
    # the two published G2xA1 grids share exactly the two common vertices
    pts_43 = {p.coords for p in o.grid_points("G2xA1", (4, 3), "C")}
    pts_32 = {p.coords for p in o.grid_points("G2xA1", (3, 2), "C")}
    assert pts_43 & pts_32 == {
        (Fraction(0), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    }


def test_spec_validation():
    with pytest.raises(ValueError):
        o.grid_points("A3", (3, 3), "C")
    with pytest.raises(ValueError):
        o.grid_points("A2xA1", (0, 2), "C")
    with pytest.raises(ValueError):
        o.grid_points("A2xA1", (2, 2), "X")


# -- epsilon ----------------------------------------------------------------------


def test_epsilon_a1_endpoints():
    # 1D behaviour through the cube algebra: endpoints of each segment have
    # torus multiplicity 1, interior points 2 per free coordinate
    for m in (2, 3, 5):
        grid = o.grid_points("A1xA1xA1", (m, 1, 1), "C")
        for p in grid:
            expected = 1
            for i in range(3):
                if 0 < p.coords[i] < 1:
                    expected *= 2
            assert p.eps == expected


def test_epsilon_interior_is_weyl_order():
    for name, spec in [("A2xA1", (3, 2)), ("A3", (4,)), ("C3", (6,)), ("G2xA1", (6, 2))]:
        alg = o.cartan(name)
        for p in o.grid_points(name, spec, "S"):
            assert p.eps == alg.weyl_order


def test_epsilon_sums_to_am_and_e_partition():
    for name, spec in [("A1xA1xA1", (2, 2, 2)), ("C2xA1", (3, 2)), ("B3", (4,))]:
        am = o.a_m(name, spec)
        assert am == sum(p.eps for p in o.grid_points(name, spec, "C"))
        # the E grid partitions the same torus point set
        assert am == sum(p.eps for p in o.grid_points(name, spec, "E"))


def test_am_is_torus_lattice_size():
    # |A_M| = M^3 * det(C) for simple algebras (index of Qcheck in Pcheck)
    import math

    for name, spec in [("A3", (2,)), ("B3", (3,)), ("C3", (2,))]:
        alg = o.cartan(name)
        det = round(np.linalg.det(alg.cartan_f))
        assert o.a_m(name, spec) == spec[0] ** 3 * det


# -- admissible weight sets --------------------------------------------------------


def test_lambda_set_a1_line():
    ws = o.lambda_set("A1xA1xA1", (4, 1, 1), "C")
    firsts = sorted({t[0] for t in ws.weights})
    assert firsts == [0, 1, 2, 3, 4]
    assert len(ws) == 5 * 2 * 2


def test_lambda_set_c2a1_example():
    ws = o.lambda_set("C2xA1", (3, 2), "C")
    assert len(ws) == 18
    for t in ws.weights:
        assert t[0] + 2 * t[1] <= 3 and t[2] <= 2


@pytest.mark.parametrize("name", ALGS)
@pytest.mark.parametrize("family", ["C", "S", "E"])
def test_lambda_cardinalities_match_grids(name, family):
    for spec in _specs(name, 5 if len(o.cartan(name).factors) == 1 else 3):
        assert len(o.lambda_set(name, spec, family)) == len(
            o.grid_points(name, spec, family)
        )


def test_lambda_s_empty_below_threshold():
    assert len(o.lambda_set("B3", (4,), "S")) == 0
    assert len(o.lambda_set("G2xA1", (4, 2), "S")) == 0
    assert len(o.lambda_set("A3", (3,), "S")) == 0


def test_lambda_e_structure():
    ws = o.lambda_set("A1xA1xA1", (2, 2, 2), "E")
    c_part = o.lambda_set("A1xA1xA1", (2, 2, 2), "C").weights
    assert ws.weights[: len(c_part)] == c_part
    assert ws.weights[len(c_part):] == ((-1, 1, 1),)


def test_lambda_a1_discrete_orthogonality_by_hand():
    # direct summation over the 1D grid embedded in the cube algebra
    m = 4
    grid = [p for p in o.grid_points("A1xA1xA1", (m, 1, 1), "C") if p.indices[1] == 0 and p.indices[2] == 0]
    weights = [t for t in o.lambda_set("A1xA1xA1", (m, 1, 1), "C") if t[1] == 0 and t[2] == 0]
    assert len(weights) == m + 1

    def c_val(t, p):
        u = float(p.coords[0])
        return 2 * np.cos(np.pi * t[0] * u) if t[0] else 1.0

    # restrict epsilon to the 1D factor: endpoints 1, interior 2
    for ta in weights:
        for tb in weights:
            tot = 0.0
            for p in grid:
                u = float(p.coords[0])
                eps1d = 2 if 0 < u < 1 else 1
                tot += eps1d * c_val(ta, p) * c_val(tb, p)
            if ta != tb:
                assert abs(tot) < 1e-10
            else:
                assert tot > 0


# -- folding ------------------------------------------------------------------------


def test_fold_identity_inside():
    for name in ALGS:
        rng = np.random.default_rng(5)
        x = o.uniform_f_samples(name, 1, rng)[0]
        pt, sign, length = o.fold_to_fundamental(name, x)
        assert np.allclose(pt, x)
        assert sign == 1 and length == 0


def test_fold_a1_affine_example():
    # 1 + delta folds to 1 - delta with one reflection
    delta = 0.125
    pt, sign, length = o.fold_to_fundamental("A1xA1xA1", (1 + delta, 0.25, 0.5))
    assert np.allclose(pt, (1 - delta, 0.25, 0.5))
    assert sign == -1 and length == 1


def test_fold_vertex_fixed():
    for name in ALGS:
        alg = o.cartan(name)
        x = [1.0 / alg.marks[0], 0.0, 0.0]
        pt, sign, _ = o.fold_to_fundamental(name, x)
        assert np.allclose(pt, x)
        assert sign == 1


@pytest.mark.parametrize("name", ALGS)
def test_fold_idempotent_and_affine_invariant(name):
    rng = np.random.default_rng(17)
    for _ in range(10):
        x = rng.normal(scale=2.0, size=3)
        pt, sign, _ = o.fold_to_fundamental(name, x)
        assert o.in_fundamental(name, pt, tol=1e-9)
        pt2, sign2, _ = o.fold_to_fundamental(name, pt)
        assert np.allclose(pt2, pt)
        # folding any reflected image gives the same representative
        for i in (1, 2, 3):
            pt3, _, _ = o.fold_to_fundamental(name, o.point_reflect(name, i, x))
            assert np.allclose(pt3, pt, atol=1e-10)
        for k in range(len(o.cartan(name).factors)):
            pt4, _, _ = o.fold_to_fundamental(name, o.affine_reflect(name, x, k))
            assert np.allclose(pt4, pt, atol=1e-10)


def test_fold_rejects_non_finite():
    with pytest.raises(o.FoldError):
        o.fold_to_fundamental("A3", (np.nan, 0, 0))
    with pytest.raises(o.FoldError):
        o.fold_to_fundamental("A3", (np.inf, 0, 0))
