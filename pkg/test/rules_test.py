import pytest

from pyhopf.errors import NotGoodBasis
from pyhopf.fields import QQ, GF, linalg
from pyhopf.gsa import derive_iterativity_rules, derive_product_rules, format_operator_change, operator_change_matrix
from pyhopf.hopf import good_basis, multiplicative_kernel, roots_of_unity, truncated_additive, constant_group

THIRD_ROOTS_BASIS = [["1/3", "1/3", "1/3"], ["-1/3", "1/3", "0"], ["-1/3", "0", "1/3"]]


@pytest.fixture
def third_roots():
    h, _ = good_basis(roots_of_unity(QQ, 3), candidate=THIRD_ROOTS_BASIS)
    return h


def test_third_roots_product_rules(third_roots):
    rules = derive_product_rules(third_roots)
    assert list(rules) == [
        "x*y = x*y",
        "d1(x*y) = -2/3*d1(x)*d1(y)-1/3*d1(x)*d2(y)-1/3*d2(x)*d1(y)+1/3*d2(x)*d2(y)",
        "d2(x*y) = 1/3*d1(x)*d1(y)-1/3*d1(x)*d2(y)-1/3*d2(x)*d1(y)-2/3*d2(x)*d2(y)",
    ]
    d = rules.to_dict()
    assert d["kind"] == "product"
    assert d["entries"][0]["terms"] == [{"i": 0, "j": 0, "coeff": "1"}]


def test_third_roots_iterativity_rules(third_roots):
    rules = derive_iterativity_rules(third_roots)
    assert list(rules) == [
        "d1∘d1 = 2*d0+d1",
        "d1∘d2 = -d0-d1-d2",
        "d2∘d1 = -d0-d1-d2",
        "d2∘d2 = 2*d0+d2",
    ]
    assert len(rules) == 4
    assert "d1∘d2 = -d0-d1-d2" in rules.summary(do_print=False, do_return=True)


def test_frobenius_kernels():
    gm = multiplicative_kernel(GF(2), 2)
    assert derive_product_rules(gm)[1] == "d1(x*y) = x*d1(y)+d1(x)*y"
    assert list(derive_iterativity_rules(gm)) == ["d1∘d1 = d1"]
    ga = truncated_additive(GF(2), 2)
    assert derive_product_rules(ga, "a", "b")[1] == "d1(a*b) = a*d1(b)+d1(a)*b"
    assert list(derive_iterativity_rules(ga)) == ["d1∘d1 = 0"]


def test_constant_group_rules():
    c2 = constant_group(QQ, group="cyclic", n=2)
    assert list(derive_product_rules(c2)) == ["x*y = x*y", "d1(x*y) = d1(x)*d1(y)"]
    assert list(derive_iterativity_rules(c2)) == ["d1∘d1 = d0"]


def test_rules_need_good_basis():
    with pytest.raises(NotGoodBasis):
        derive_product_rules(roots_of_unity(QQ, 3))
    with pytest.raises(NotGoodBasis):
        derive_iterativity_rules(roots_of_unity(QQ, 3))


def test_operator_change():
    swap = linalg.as_matrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]], field=QQ)
    t = operator_change_matrix(swap, QQ)
    assert format_operator_change(t) == ["d0' = d0", "d1' = d2", "d2' = d1"]
    scale = linalg.as_matrix([[1, 0], [0, 2]], field=QQ)
    assert format_operator_change(operator_change_matrix(scale, QQ)) == ["d0' = d0", "d1' = 1/2*d1"]
