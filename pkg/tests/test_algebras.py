"""Static-table invariants: exactness, embeddings, volumes, scalar products."""

import math
from fractions import Fraction

import numpy as np
import pytest

import orbitfn as o
from orbitfn.algebras import tables_as_dict

import reference_data as rd

ALGS = o.ALGEBRAS


@pytest.mark.parametrize("name", ALGS)
def test_cartan_matches_reference(name):
    alg = o.cartan(name)
    assert [list(r) for r in alg.cartan] == rd.CARTAN[name]
    assert [list(r) for r in alg.cartan_inv] == rd.CARTAN_INV[name]
    assert alg.marks == rd.MARKS[name]
    assert alg.root_len2 == rd.ROOT_LEN2[name]
    assert alg.weyl_order == rd.WEYL_ORDER[name]


@pytest.mark.parametrize("name", ALGS)
def test_cartan_inverse_exact(name):
    alg = o.cartan(name)
    for i in range(3):
        for j in range(3):
            entry = sum(alg.cartan[i][k] * alg.cartan_inv[k][j] for k in range(3))
            assert entry == (1 if i == j else 0)


@pytest.mark.parametrize("name", ALGS)
def test_cartan_recomputed_from_embedding(name):
    # C_ij = 2 <alpha_i, alpha_j> / <alpha_j, alpha_j>
    alg = o.cartan(name)
    A = alg.alpha_ortho
    for i in range(3):
        for j in range(3):
            recomputed = 2 * np.dot(A[i], A[j]) / np.dot(A[j], A[j])
            assert abs(recomputed - alg.cartan[i][j]) < 1e-12


@pytest.mark.parametrize("name", ALGS)
def test_root_lengths_and_long_root_normalization(name):
    alg = o.cartan(name)
    for i in range(3):
        length2 = np.dot(alg.alpha_ortho[i], alg.alpha_ortho[i])
        assert abs(length2 - float(alg.root_len2[i])) < 1e-12
    assert max(alg.root_len2) == 2  # long roots have squared length 2


@pytest.mark.parametrize("name", ALGS)
def test_duality_alpha_omegacheck(name):
    alg = o.cartan(name)
    for i in range(3):
        for j in range(3):
            val = np.dot(alg.alpha_ortho[i], alg.omegacheck_ortho[j])
            assert abs(val - (1 if i == j else 0)) < 1e-12


@pytest.mark.parametrize("name", ALGS)
def test_omegacheck_is_rescaled_omega(name):
    alg = o.cartan(name)
    for i in range(3):
        scaled = alg.omega_ortho[i] * 2 / float(alg.root_len2[i])
        assert np.allclose(scaled, alg.omegacheck_ortho[i], atol=1e-12)


@pytest.mark.parametrize("name", ALGS)
def test_highest_root_marks_comarks(name):
    # sum m_i alpha_i = sum q_i alphacheck_i per factor, and both have length^2 2
    alg = o.cartan(name)
    for f in alg.factors:
        xi = sum(alg.marks[i] * alg.alpha_ortho[i] for i in f.indices)
        xi_dual = sum(
            alg.comarks[i] * alg.alpha_ortho[i] * 2 / float(alg.root_len2[i])
            for i in f.indices
        )
        assert np.allclose(xi, xi_dual, atol=1e-12)
        assert abs(np.dot(xi, xi) - 2) < 1e-12


@pytest.mark.parametrize("name", ALGS)
def test_volume_closed_form(name):
    assert abs(o.cartan(name).vol_f - float(rd.VOLUMES[name])) < 1e-12


@pytest.mark.parametrize("name", ALGS)
def test_gram_matrices(name):
    alg = o.cartan(name)
    go = np.array(alg.gram_omega, dtype=float)
    ga = np.array(alg.gram_alpha, dtype=float)
    for g in (go, ga):
        assert np.allclose(g, g.T, atol=1e-14)
        assert np.all(np.linalg.eigvalsh(g) > 0)
    # agreement with the orthonormal embeddings
    assert np.allclose(go, alg.omega_ortho @ alg.omega_ortho.T, atol=1e-12)
    assert np.allclose(ga, alg.alpha_ortho @ alg.alpha_ortho.T, atol=1e-12)
    assert alg.pairing_omega_omegacheck == alg.cartan_inv


def test_scalar_product_examples():
    assert o.scalar_product("A2xA1", (1, 0, 0), "omega", (1, 0, 0), "omega") == Fraction(2, 3)
    # <alpha_i, omegacheck_j> = delta_ij for all algebras
    for name in ALGS:
        for i in range(3):
            ei = tuple(int(i == k) for k in range(3))
            for j in range(3):
                ej = tuple(int(j == k) for k in range(3))
                val = o.scalar_product(name, ei, "alpha", ej, "omegacheck")
                assert val == (1 if i == j else 0)


def test_scalar_product_weight_point_pairing():
    # <mu, x> with mu in omega and x in omegacheck coordinates is mu.Cinv.x
    rng = np.random.default_rng(3)
    for name in ALGS:
        alg = o.cartan(name)
        for _ in range(100 // len(ALGS) + 1):
            mu = rng.integers(-4, 5, size=3)
            x = rng.integers(-4, 5, size=3)
            via_cinv = sum(
                Fraction(int(mu[i])) * alg.cartan_inv[i][j] * int(x[j])
                for i in range(3)
                for j in range(3)
            )
            exact = o.scalar_product(name, tuple(mu), "omega", tuple(x), "omegacheck")
            assert exact == via_cinv
            via_ortho = float(
                np.dot(o.to_orthonormal(name, mu, "omega"), o.to_orthonormal(name, x, "omegacheck"))
            )
            assert abs(float(exact) - via_ortho) < 1e-12


def test_scalar_product_bilinear_symmetric():
    rng = np.random.default_rng(11)
    for name in ("A3", "C2xA1", "G2xA1"):
        u, v, w = (tuple(int(x) for x in rng.integers(-3, 4, size=3)) for _ in range(3))
        s = o.scalar_product
        assert s(name, u, "omega", v, "alpha") == s(name, v, "alpha", u, "omega")
        uv = s(name, u, "omega", v, "omega")
        uw = s(name, u, "omega", w, "omega")
        upw = tuple(vi + wi for vi, wi in zip(v, w))
        assert s(name, u, "omega", upw, "omega") == uv + uw


def test_scalar_product_unknown_basis():
    with pytest.raises(ValueError):
        o.scalar_product("A3", (1, 0, 0), "omega", (1, 0, 0), "nope")


def test_to_orthonormal_examples():
    assert np.allclose(o.to_orthonormal("A3", (0, 0, 1), "omega"), [0.5, 0.5, 0.5])
    # omegacheck_1 of C2xA1 is 2*omega_1 = (1,1,0)
    assert np.allclose(o.to_orthonormal("C2xA1", (1, 0, 0), "omegacheck"), [1, 1, 0])
    assert np.allclose(
        o.to_orthonormal("C2xA1", (1, 0, 0), "omegacheck"),
        2 * o.to_orthonormal("C2xA1", (1, 0, 0), "omega"),
    )
    assert np.allclose(o.to_orthonormal("B3", (0, 0, 0), "alpha"), [0, 0, 0])


@pytest.mark.parametrize("name", ALGS)
@pytest.mark.parametrize("basis", ["alpha", "omega", "alphacheck", "omegacheck"])
def test_to_orthonormal_invertible(name, basis):
    rng = np.random.default_rng(hash((name, basis)) % 2**32)
    coords = rng.normal(size=3)
    back = o.from_orthonormal(name, o.to_orthonormal(name, coords, basis), basis)
    assert np.allclose(back, coords, atol=1e-10)


def test_dual_marks_values():
    assert o.dual_marks("A3") == (1, 1, 1)
    assert o.dual_marks("C2xA1") == (1, 2, 1)
    assert o.dual_marks("B3") == (2, 2, 1)
    assert o.dual_marks("G2xA1") == (3, 2, 1)
    assert o.dual_marks("C3") == (1, 2, 2)


@pytest.mark.parametrize("name", ALGS)
def test_dual_marks_highest_short_coroot(name):
    # the dual-mark combination of coroots is a coroot of squared length 2
    # (the highest root of the dual system), and it dominates the coroot set
    alg = o.cartan(name)
    for f in alg.factors:
        theta = sum(
            alg.dual_marks[i] * alg.alpha_ortho[i] * 2 / float(alg.root_len2[i])
            for i in f.indices
        )
        assert abs(np.dot(theta, theta) - 2) < 1e-12


def test_canonical_name_aliases():
    assert o.canonical_name("a2xa1") == "A2xA1"
    assert o.canonical_name("A2×A1") == "A2xA1"
    with pytest.raises(o.AlgebraKeyError):
        o.canonical_name("F4")


@pytest.mark.parametrize("name", ALGS)
def test_tables_dict_serializable(name):
    import json

    doc = tables_as_dict(name)
    json.dumps(doc)
    assert doc["weyl_order"] == rd.WEYL_ORDER[name]
    assert len(doc["vertices_ortho"]) == {1: 4, 2: 6, 3: 8}[len(o.cartan(name).factors)]


@pytest.mark.parametrize("name", ALGS)
def test_fundamental_vertices_match_tables(name):
    alg = o.cartan(name)
    got = {
        tuple(round(v, 12) for v in vert) for vert in alg.fundamental_vertices()
    }
    expect = set()
    for coeffs in rd.f_vertices_omegacheck(name):
        vert = o.to_orthonormal(name, [float(c) for c in coeffs], "omegacheck")
        expect.add(tuple(round(v, 12) for v in vert))
    assert got == expect
