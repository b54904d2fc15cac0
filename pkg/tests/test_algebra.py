from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quivnoeth import (
    QuiverError,
    Representation,
    TruncationOverflow,
    algebra_noetherian,
    build_algebra,
    finite_quiver_criterion,
    is_left_noetherian,
    multiply,
    rep_module_correspondence,
)
from quivnoeth.algebra import action_matrix, regular_representation
from quivnoeth.gf import rank
from quivnoeth.linrep import random_representation, zero_representation

from corpus import corpus_quiver
from oracles import path_count
from strategies import quivers


def test_dimensions(a2, kronecker, jordan):
    assert build_algebra(a2, 2).dim == 3
    assert build_algebra(kronecker, 2).dim == 4
    alg = build_algebra(jordan, 2, 5)
    assert alg.dim == 6 and alg.truncated


def test_cyclic_needs_truncation(jordan, ray_simple):
    with pytest.raises(QuiverError):
        build_algebra(jordan, 2)
    with pytest.raises(QuiverError):
        build_algebra(ray_simple, 2)


def test_acyclic_ignores_truncation(a2):
    assert not build_algebra(a2, 3, 7).truncated


def test_a2_products(a2):
    alg = build_algebra(a2, 2)
    a, ex = alg.basis_element(a2.path("x", ["a"])), alg.idempotent("x")
    assert np.array_equal(multiply(alg, a, ex), a)
    assert not multiply(alg, ex, a).any()


def test_jordan_overflow(jordan):
    alg = build_algebra(jordan, 3, 2)
    l1, l2 = (alg.basis_element(jordan.path("x", ["l"] * n)) for n in (1, 2))
    assert np.array_equal(multiply(alg, l1, l1), l2)
    with pytest.raises(TruncationOverflow):
        multiply(alg, l2, l1)


@settings(max_examples=40)
@given(quivers(max_vertices=3, max_arrows=4, acyclic=True), st.sampled_from([2, 3]))
def test_dimension_is_path_count(q, p):
    assert build_algebra(q, p).dim == path_count(q, len(q.vertices))


def check_laws(alg):
    basis = [alg.basis_element(b) for b in alg.basis]
    one = alg.one()
    for u in basis:
        assert np.array_equal(multiply(alg, one, u), u)
        assert np.array_equal(multiply(alg, u, one), u)
    for u, v, w in product(basis, repeat=3):
        try:
            left = multiply(alg, multiply(alg, u, v), w)
        except TruncationOverflow:
            left = None
        try:
            right = multiply(alg, u, multiply(alg, v, w))
        except TruncationOverflow:
            right = None
        if left is not None and right is not None:
            assert np.array_equal(left, right)
    ids = alg.idempotents()
    for x, ex in ids.items():
        for y, ey in ids.items():
            expect = ex if x == y else np.zeros(alg.dim, dtype=np.int64)
            assert np.array_equal(multiply(alg, ex, ey), expect)


@pytest.mark.parametrize("name, p, L", [("a2", 2, None), ("kronecker", 2, None), ("a3", 3, None),
                                        ("branch_loop", 2, 3), ("jordan", 5, 4), ("two_loops", 2, 3)])
def test_algebra_laws_on_corpus(name, p, L):
    check_laws(build_algebra(corpus_quiver(name), p, L))


@settings(max_examples=25)
@given(quivers(max_vertices=3, max_arrows=3), st.sampled_from([2, 3]))
def test_algebra_laws_random(q, p):
    check_laws(build_algebra(q, p, 2))


@settings(max_examples=40)
@given(quivers(max_vertices=3, max_arrows=5, acyclic=True))
def test_one_is_identity_on_random_elements(q):
    alg = build_algebra(q, 3)
    rng = np.random.default_rng(len(alg.basis))
    u = rng.integers(0, 3, size=alg.dim)
    assert np.array_equal(multiply(alg, alg.one(), u), u % 3)


def test_noetherian_verdicts(jordan, two_loops, a2):
    assert algebra_noetherian(jordan, 2)
    assert not algebra_noetherian(two_loops, 2)
    assert algebra_noetherian(a2, 2)


@settings(max_examples=80)
@given(quivers())
def test_noetherian_agrees_with_quiver(q):
    expect = all(r.verdict for r in is_left_noetherian(q).values())
    assert algebra_noetherian(q, 2) == expect == finite_quiver_criterion(q)


def test_module_correspondence_examples(a2, kronecker):
    M = Representation(a2, 2, {"x": 1, "y": 1}, {"a": [[1]]})
    rep = rep_module_correspondence(a2, 2, M)
    assert rep.ok and rep.dim == 2
    assert rep_module_correspondence(a2, 2, zero_representation(a2, 2)).ok
    M = random_representation(kronecker, 3, {"x": 2, "y": 3}, np.random.default_rng(0))
    assert rep_module_correspondence(kronecker, 3, M).ok


def test_module_correspondence_rejects_cyclic(jordan):
    with pytest.raises(QuiverError):
        rep_module_correspondence(jordan, 2, zero_representation(jordan, 2))


@settings(max_examples=30)
@given(quivers(max_vertices=3, max_arrows=4, acyclic=True))
def test_algebra_acts_faithfully_on_regular_rep(q):
    # the action on the sum of all free representations separates basis paths
    alg = build_algebra(q, 2)
    reg = regular_representation(q, 2)
    assert reg.total_dim == alg.dim
    acts = [action_matrix(alg, reg, b) for b in alg.basis]
    stacked = np.array([a.ravel() for a in acts])
    assert rank(stacked, 2) == alg.dim
    assert rep_module_correspondence(q, 2, reg).ok


def test_describe(kronecker):
    alg = build_algebra(kronecker, 3)
    u = alg.element({kronecker.path("x", ["a"]): 2, kronecker.trivial_path("y"): 1})
    assert alg.describe(u) == "e_y + 2*a"
    assert alg.describe(np.zeros(alg.dim, dtype=np.int64)) == "0"
