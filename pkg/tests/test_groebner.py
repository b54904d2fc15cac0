import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quivnoeth import (
    DictionaryOrder,
    GroebnerOrder,
    QuiverError,
    ReversedDegreeOrder,
    check_finite_category,
    check_g1,
    check_g2,
    check_refinement,
    compare_paths,
    load_category,
    parse_category,
)
from quivnoeth.groebner import CategoryError, g1_violated, path_category
from quivnoeth.quiver import iter_paths

from strategies import quivers


def test_compare_examples(jordan, kronecker):
    o = GroebnerOrder.default(jordan)
    l1, l2 = jordan.path("x", ["l"]), jordan.path("x", ["l", "l"])
    assert compare_paths(o, l2, l1) == -1
    k = GroebnerOrder(["a", "b"])
    a, b = kronecker.path("x", ["a"]), kronecker.path("x", ["b"])
    assert compare_paths(k, a, b) == 1
    assert compare_paths(k, a, a) == 0


def test_compare_errors(kronecker):
    o = GroebnerOrder(["a"])
    with pytest.raises(QuiverError):
        compare_paths(o, kronecker.path("x", ["a"]), kronecker.path("x", ["b"]))
    with pytest.raises(QuiverError):
        compare_paths(o, kronecker.trivial_path("x"), kronecker.trivial_path("y"))


def test_ranking_must_be_injective():
    with pytest.raises(ValueError):
        GroebnerOrder(["a", "a"])


def test_ray_arrows_ranked_last(ray_simple):
    o = GroebnerOrder.default(ray_simple)
    assert o.rank("a") < o.rank("r:0") < o.rank("r:1")


@settings(max_examples=60)
@given(quivers(max_vertices=3, max_arrows=4), st.sampled_from([GroebnerOrder, DictionaryOrder, ReversedDegreeOrder]))
def test_encode_matches_scalar_keys(q, cls):
    o = cls.default(q)
    for v in q.vertices:
        paths = list(iter_paths(q, v, 3))
        width = max(len(p) for p in paths)
        block = np.full((len(paths), width), -1, dtype=np.int64)
        for i, p in enumerate(paths):
            block[i, : len(p)] = o.ranks(p)
        lengths = np.array([len(p) for p in paths], dtype=np.int64)
        enc = [tuple(int(v) for v in row) for row in o.encode(block, lengths)]
        for i in range(len(paths)):
            for j in range(len(paths)):
                vec = (enc[i] > enc[j]) - (enc[i] < enc[j])
                assert vec == o.compare(paths[i], paths[j])


@settings(max_examples=60)
@given(quivers(max_vertices=3, max_arrows=4))
def test_degree_lex_is_total_strict_weak_order(q):
    o = GroebnerOrder.default(q)
    for v in q.vertices:
        ps = list(iter_paths(q, v, 2))
        for a in ps:
            for b in ps:
                c = o.compare(a, b)
                assert c == -o.compare(b, a)
                assert (c == 0) == (a == b)
                for d in ps:
                    if c < 0 and o.compare(b, d) < 0:
                        assert o.compare(a, d) < 0


def brute_g1(order, q, x, L):
    """Every pair in each Q(x,y) and every omega, no sorting shortcut."""
    ps = list(iter_paths(q, x, L))
    for phi in ps:
        for psi in ps:
            if phi.target != psi.target or order.compare(phi, psi) >= 0:
                continue
            for omega in iter_paths(q, phi.target, L):
                if order.compare(phi.followed_by(omega), psi.followed_by(omega)) >= 0:
                    return False
    return True


@settings(max_examples=80)
@given(quivers(max_vertices=3, max_arrows=4), st.sampled_from([GroebnerOrder, DictionaryOrder, ReversedDegreeOrder]))
def test_check_g1_matches_brute_force(q, cls):
    o = cls.default(q)
    for v in q.vertices:
        assert (check_g1(o, q, v, 2) is None) == brute_g1(o, q, v, 2)


def test_g1_degree_lex_two_loops(two_loops):
    assert check_g1(GroebnerOrder(["a", "b"]), two_loops, "x", 4) is None


def test_g1_dictionary_order_counterexample(two_loops):
    o = DictionaryOrder(["a", "b"])
    aa, a, b = (two_loops.path("x", w) for w in (["a", "a"], ["a"], ["b"]))
    assert g1_violated(o, aa, a, b)
    cx = check_g1(o, two_loops, "x", 4)
    assert cx is not None and [str(p) for p in cx.paths] == ["x: -", "x: a", "x: b"]
    phi, psi, omega = cx.paths
    assert g1_violated(o, phi, psi, omega)


def test_g1_any_order_on_a2(a2):
    for cls in (GroebnerOrder, DictionaryOrder, ReversedDegreeOrder):
        assert check_g1(cls.default(a2), a2, "x", 5) is None


def test_g2_examples(jordan, kronecker):
    assert check_g2(GroebnerOrder.default(jordan), jordan, "x", 6) is None
    for L in (1, 2, 5):
        assert check_g2(GroebnerOrder.default(kronecker), kronecker, "x", L) is None


def test_refinement_examples(jordan, a2):
    assert check_refinement(GroebnerOrder.default(jordan), jordan, "x", 4) is None
    cx = check_refinement(ReversedDegreeOrder.default(jordan), jordan, "x", 4)
    assert [str(p) for p in cx.paths] == ["x: l", "x: -"]
    assert check_refinement(GroebnerOrder.default(a2), a2, "x", 4) is None


def test_truncation_must_be_positive(jordan):
    o = GroebnerOrder.default(jordan)
    for check in (check_g1, check_g2, check_refinement):
        with pytest.raises(ValueError):
            check(o, jordan, "x", 0)


@settings(max_examples=60)
@given(quivers(max_vertices=3, max_arrows=5))
def test_degree_lex_axioms_on_random_quivers(q):
    o = GroebnerOrder.default(q)
    for v in q.vertices:
        assert check_g1(o, q, v, 3) is None
        assert check_g2(o, q, v, 3) is None
        assert check_refinement(o, q, v, 3) is None


def test_a2_path_category(a2, corpus_dir):
    rep = check_finite_category(path_category(a2))
    assert rep.ok and rep.lattice_height["x"] == 2
    assert rep.ideal_counts["x"] == 2
    loaded = load_category(corpus_dir / "a2_path.category")
    assert check_finite_category(loaded).lattice_height == rep.lattice_height


def test_monoid_category(corpus_dir):
    rep = check_finite_category(load_category(corpus_dir / "monoid.category"))
    assert rep.g1 is not None and rep.g1[:4] == ("G1", "z", "one", "z")
    assert rep.g2 is None and rep.acc
    assert not rep.ok


def test_partial_hom_order_fails_g2(kronecker):
    c = path_category(kronecker)
    c.hom_orders[("x", "y")] = [["a"]]
    rep = check_finite_category(c)
    assert rep.g2 is not None and rep.g2[-1] == "incomparable pair"


def test_broken_associativity_rejected():
    text = """
    object o
    identity one at o
    morphism s : o -> o
    morphism t : o -> o
    compose s s = t
    compose s t = s
    compose t s = t
    compose t t = t
    """
    with pytest.raises(CategoryError, match="associative"):
        parse_category(text)


@pytest.mark.parametrize(
    "text, needle",
    [
        ("object o\n", "no identity"),
        ("object o\nidentity i at o\nmorphism f : o -> o\n", "missing"),
        ("object o\nidentity i at o\ncompose i i = f\n", "unknown morphism"),
        ("object o\nidentity i at o\nmorphism f : o -> o\ncompose i f = i\ncompose f f = f\n", "neutral"),
        ("object o\nfrobnicate\n", "line 2"),
        ("object o\nidentity i at o\norder o o : i < \n", "malformed"),
    ],
)
def test_category_parse_errors(text, needle):
    with pytest.raises(CategoryError, match=needle):
        parse_category(text)


def test_path_category_requires_acyclic(jordan):
    with pytest.raises(QuiverError):
        path_category(jordan)


@settings(max_examples=30)
@given(quivers(max_vertices=3, max_arrows=3, acyclic=True))
def test_path_categories_pass_with_degree_lex(q):
    rep = check_finite_category(path_category(q))
    assert rep.ok
