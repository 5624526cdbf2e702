import pytest

from pyhopf.errors import NotAProduct, RingMismatch
from pyhopf.fields import GF
from pyhopf.gsa import OperatorSpec, check_action, compose_product_action, decompose_product_action
from pyhopf.hopf import change_basis, constant_group, product, truncated_additive
from pyhopf.poly import PolyRing


@pytest.fixture
def hopf():
    return product(truncated_additive(GF(2), 2), constant_group(GF(2), group="cyclic", n=2))


@pytest.fixture
def ring():
    return PolyRing(GF(2), ["a", "b"])


def test_commuting_actions(hopf, ring):
    # images (g, s(g), d(g), d(s(g))) with s swapping a and b and d(a) = d(b) = 1
    spec = OperatorSpec(hopf, ring, {"a": ["a", "b", "1", "1"], "b": ["b", "a", "1", "1"]})
    assert check_action(spec).passed
    d, s, report = decompose_product_action(spec)
    assert report.passed, report.summary(do_print=False, do_return=True)
    assert d.images["a"] == (ring.gen("a"), ring.one())
    assert s.images["a"] == (ring.gen("a"), ring.gen("b"))
    assert report.details["e"] == [2, 2]

    recomposed = compose_product_action(d, s, hopf=hopf)
    for g in spec.generators:
        assert recomposed.images[g] == spec.images[g]


def test_non_commuting_actions(hopf, ring):
    # d(a) = b, d(b) = 0 does not commute with the swap: s(d(a)) = a but d(s(a)) = 0
    spec = OperatorSpec(hopf, ring, {"a": ["a", "b", "b", "0"], "b": ["b", "a", "0", "b"]})
    d, s, report = decompose_product_action(spec)
    assert check_action(d).passed
    assert check_action(s).passed
    assert not report.passed
    assert (1, 1) in report.failing("mixed")
    assert report.failing("commute") == [(1, 1), (1, 1)]
    assert not report.law_passed("full.iterativity")
    orders = {v.info["order"] for v in report.violations if v.law == "mixed"}
    assert orders == {"d2∘d1"}


def test_not_a_product(hopf, ring):
    plain = constant_group(GF(2), group="cyclic", n=2)
    with pytest.raises(NotAProduct):
        decompose_product_action(OperatorSpec(plain, ring, {"a": ["a", "b"], "b": ["b", "a"]}))
    moved = change_basis(hopf, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1]])
    spec = OperatorSpec(moved, ring, {"a": ["a", "0", "0", "0"], "b": ["b", "0", "0", "0"]})
    with pytest.raises(NotAProduct):
        decompose_product_action(spec)


def test_compose_needs_same_carrier(hopf, ring):
    ga = truncated_additive(GF(2), 2)
    c2 = constant_group(GF(2), group="cyclic", n=2)
    d = OperatorSpec(ga, ring, {"a": ["a", "1"], "b": ["b", "1"]})
    s = OperatorSpec(c2, PolyRing(GF(2), ["a"]), {"a": ["a", "a"]})
    with pytest.raises(RingMismatch):
        compose_product_action(d, s)
    s = OperatorSpec(c2, ring, {"a": ["a", "b"], "b": ["b", "a"]})
    assert check_action(compose_product_action(d, s)).passed
