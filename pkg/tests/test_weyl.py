"""Reflection and orbit machinery against tables and independent models."""

import numpy as np
import pytest

import orbitfn as o
from orbitfn.weyl import point_orbit

import reference_data as rd

ALGS = o.ALGEBRAS
GENERIC = (1, 10, 100)  # no accidental coincidences among symbolic combinations


def test_reflect_examples():
    assert o.reflect("A2xA1", 1, (2, 3, 5)) == (-2, 5, 5)  # (-a, a+b, c)
    assert o.reflect("B3", 3, (2, 3, 5)) == (2, 8, -5)     # (a, b+c, -c)
    for name in ALGS:
        assert o.reflect(name, 1, (0, 0, 0)) == (0, 0, 0)
    with pytest.raises(IndexError):
        o.reflect("A3", 4, (1, 0, 0))


def test_reflect_b3_image_in_published_orbit():
    a, b, c = GENERIC
    assert o.reflect("B3", 3, GENERIC) in rd.orbit_b3(a, b, c)


@pytest.mark.parametrize("name", ALGS)
def test_reflect_involution(name):
    rng = np.random.default_rng(1)
    for _ in range(20):
        lam = tuple(int(v) for v in rng.integers(-6, 7, size=3))
        for i in (1, 2, 3):
            assert o.reflect(name, i, o.reflect(name, i, lam)) == lam
            x = tuple(float(v) for v in rng.normal(size=3))
            back = o.point_reflect(name, i, o.point_reflect(name, i, x))
            assert np.allclose(back, x, atol=1e-12)


@pytest.mark.parametrize("name", ALGS)
def test_orbit_matches_published_and_model(name):
    enum = o.orbit(name, GENERIC).coordinate_set()
    assert enum == rd.GENERIC_ORBITS[name](*GENERIC)
    assert enum == rd.model_orbit(name, *GENERIC)


def test_a3_erratum_entry_not_in_orbit():
    a, b, c = GENERIC
    enum = o.orbit("A3", GENERIC).coordinate_set()
    assert rd.ERRATA["A3"]["printed"](a, b, c) not in enum
    assert rd.ERRATA["A3"]["corrected"](a, b, c) in enum


@pytest.mark.parametrize("name", ALGS)
def test_orbit_sizes_all_patterns(name):
    for pattern, size in rd.ORBIT_SIZES[name].items():
        lam = rd.PATTERN_WEIGHTS[pattern]
        assert len(o.orbit(name, lam)) == size
        assert o.orbit_size(name, lam) == size


@pytest.mark.parametrize("name", ALGS)
def test_orbit_closure(name):
    orb = o.orbit(name, (2, 1, 3))
    pts = orb.coordinate_set()
    for p in orb.points:
        for i in (1, 2, 3):
            assert o.reflect(name, i, p.coords) in pts


@pytest.mark.parametrize("name", ALGS)
def test_parity_well_defined_generic(name):
    # recompute with a different application order: reversed generator sweep
    alg = o.cartan(name)
    seed = (1, 2, 3)
    ref = {p.coords: p.parity for p in o.orbit(alg, seed).points}
    # manual closure applying generators in reverse order
    masks = {seed: 1}
    stack = [(seed, 0)]
    seen = {(seed, 0)}
    while stack:
        v, par = stack.pop()
        for i in (3, 2, 1):
            w = o.reflect(alg, i, v)
            state = (w, 1 - par)
            if state not in seen:
                seen.add(state)
                stack.append(state)
                masks[w] = masks.get(w, 0) | (2 if par == 0 else 1)
    assert set(masks) == set(ref)
    for coords, mask in masks.items():
        assert mask in (1, 2)
        assert ref[coords] == (1 if mask == 1 else -1)


def test_trivial_orbit():
    for name in ALGS:
        orb = o.orbit(name, (0, 0, 0))
        assert len(orb) == 1
        assert orb.points[0].parity == 1


def test_even_orbit_sizes():
    # strictly dominant: half the full orbit; on a wall: the full orbit
    for name in ALGS:
        assert 2 * len(o.even_orbit(name, (1, 2, 3))) == len(o.orbit(name, (1, 2, 3)))
        lam = (1, 2, 0)
        assert len(o.even_orbit(name, lam)) == len(o.orbit(name, lam))


def test_even_orbit_single_sign_flips_are_odd():
    # the rank-one behaviour inside the cube algebra: one sign flip is an odd
    # word, so the even orbit of a generic seed never contains it, while any
    # two flips land inside
    even = o.even_orbit("A1xA1xA1", (1, 2, 3)).coordinate_set()
    assert (-1, 2, 3) not in even
    assert (1, -2, 3) not in even
    assert (-1, -2, 3) in even and (-1, 2, -3) in even and (1, -2, -3) in even
    assert len(even) == 4
    # seed with a zero: the fixing reflection makes single flips reachable
    even0 = o.even_orbit("A1xA1xA1", (1, 2, 0)).coordinate_set()
    assert (-1, 2, 0) in even0 and len(even0) == 4


def test_a3_even_orbit_generic_parities():
    orb = o.orbit("A3", GENERIC)
    even = {p.coords for p in orb.points if p.parity == 1}
    assert even == o.even_orbit("A3", GENERIC).coordinate_set()
    assert len(even) == 12


def test_a3_boundary_weight_even_equals_full():
    lam = (1, 10, 0)
    assert len(o.orbit("A3", lam)) == 12
    assert o.even_orbit("A3", lam).coordinate_set() == o.orbit("A3", lam).coordinate_set()


def test_g2a1_orbit_contains_listed_point():
    a, b, c = 1, 2, 5
    pts = o.orbit("G2xA1", (a, b, c)).coordinate_set()
    assert len(pts) == 24
    assert (2 * a + b, -(3 * a + b), c) in pts
    assert (-(2 * a + b), 3 * a + b, -c) in pts


def test_point_orbit_rational():
    from fractions import Fraction

    pts = point_orbit("A3", (Fraction(1, 3), Fraction(0), Fraction(0)))
    assert len(pts) == 4  # pattern (a,0,0) of A3
