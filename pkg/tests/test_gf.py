import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quivnoeth.gf import Subspace, all_subspaces, check_prime, gaussian_binomial_total, nullspace, rank, rref

from oracles import brute_subspaces, closure


def matrices(p, max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    ).map(lambda rows: np.array(rows, dtype=np.int64))


def test_check_prime():
    assert check_prime(3) == 3
    with pytest.raises(ValueError):
        check_prime(4)


def test_rref_example():
    r, piv = rref(np.array([[2, 4], [1, 2]]), 5)
    assert piv == [0] and r.tolist() == [[1, 2]]


@settings(max_examples=100)
@given(st.sampled_from([2, 3, 5]).flatmap(lambda p: st.tuples(st.just(p), matrices(p))))
def test_nullspace_is_kernel(args):
    p, a = args
    ker = nullspace(a, p)
    assert ker.shape == (a.shape[1] - rank(a, p), a.shape[1])
    assert not ((a @ ker.T) % p).any()
    assert rank(ker, p) == ker.shape[0] if ker.size else True


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (2, 3), (3, 2), (5, 1), (5, 2)])
def test_all_subspaces_match_brute_force(p, n):
    ours = all_subspaces(p, n)
    assert len(ours) == len(set(ours)) == gaussian_binomial_total(p, n)
    as_sets = {frozenset(s.vectors()) for s in ours}
    assert as_sets == brute_subspaces(p, n)


@settings(max_examples=100)
@given(
    st.sampled_from([2, 3]).flatmap(
        lambda p: st.tuples(
            st.just(p),
            st.lists(st.lists(st.integers(0, p - 1), min_size=3, max_size=3), max_size=3),
            st.lists(st.lists(st.integers(0, p - 1), min_size=3, max_size=3), max_size=3),
        )
    )
)
def test_sum_and_intersection_as_sets(args):
    p, u, v = args
    U, V = Subspace.span(u, p, 3), Subspace.span(v, p, 3)
    su, sv = set(U.vectors()), set(V.vectors())
    assert su == closure([tuple(x) for x in u], p, 3)
    assert set((U & V).vectors()) == su & sv
    assert set((U + V).vectors()) == closure(su | sv, p, 3)
    assert (U <= V) == su.issubset(sv)
    assert (U < V) == (su < sv)


def test_image_and_project():
    U = Subspace.span([[1, 1, 0]], 2, 3)
    assert U.image(np.array([[1, 0, 0], [0, 1, 1]])).basis == ((1, 1),)
    assert U.project([1]).basis == ((1,),)
    assert U.project([2]).dim == 0


def test_ambient_mismatch():
    with pytest.raises(ValueError):
        Subspace.zero(2, 2) + Subspace.zero(2, 3)
