import numpy as np
import pytest

from pyhopf.errors import DimensionMismatch, NoAntipode, NotGoodBasis, SingularMatrix
from pyhopf.fields import QQ, GF, extension, linalg
from pyhopf.gsa import operator_change_matrix
from pyhopf.hopf import (build_hopf, verify_bialgebra, verify_antipode, solve_antipode, good_basis, change_basis,
                         base_change, product, product_factors, mutate, tensors_equal, constant_group, trivial,
                         truncated_additive, roots_of_unity)

# the good basis of mu_3 in the eps^k basis used throughout the third-roots examples
THIRD_ROOTS_BASIS = [["1/3", "1/3", "1/3"], ["-1/3", "1/3", "0"], ["-1/3", "0", "1/3"]]


def _monoid_bialgebra(field):
    """Functions on the multiplicative monoid {1, 0}: a bialgebra without antipode."""
    t = [[0, 1], [1, 1]]
    mult = np.zeros((2, 2, 2), dtype=int)
    comult = np.zeros((2, 2, 2), dtype=int)
    for g in range(2):
        mult[g, g, g] = 1
        for h in range(2):
            comult[g, h, t[g][h]] = 1
    return build_hopf(field, mult.tolist(), comult.tolist(), [1, 0], [1, 1])


def test_monoid_has_no_antipode():
    h = _monoid_bialgebra(QQ)
    assert verify_bialgebra(h).passed
    with pytest.raises(NoAntipode):
        solve_antipode(h)
    with pytest.raises(NoAntipode):
        h.with_antipode()


def test_shapes():
    with pytest.raises(DimensionMismatch):
        build_hopf(QQ, [[[1]]], [[[1]]], [1, 0], [1, 0])
    with pytest.raises(DimensionMismatch):
        build_hopf(QQ, [[[1]]], [[[1]]], [1], [1], basis_names=["a", "b"])


def test_antipodes():
    c3 = constant_group(QQ, group="cyclic", n=3)
    s = solve_antipode(c3)
    assert np.all(s == c3.antipode)
    assert s[1, 2] == QQ(1) and s[1, 1] == QQ(0)
    assert verify_antipode(c3, s).passed

    ga = truncated_additive(GF(3), 3)
    s = solve_antipode(ga)
    # S(v) = -v, S(v^2) = v^2
    assert s[1, 1] == GF(3)(-1)
    assert s[2, 2] == GF(3)(1)

    mu = roots_of_unity(QQ, 3)
    s = solve_antipode(mu)
    assert s[1, 2] == QQ(1) and s[2, 1] == QQ(1) and s[0, 0] == QQ(1)


def test_verify_reports_violations():
    h = constant_group(QQ, group="cyclic", n=2)
    bad = mutate(h, "unit", (0,), 1)
    report = verify_bialgebra(bad)
    assert not report.passed
    assert not report.law_passed("unit_law")
    assert report.law_passed("assoc")
    assert "unit_law" in report.summary(do_print=False, do_return=True)
    d = report.to_dict()
    assert d["passed"] is False
    assert d["laws"]["assoc"] is True
    assert bad.metadata["mutation"] == {"tensor": "unit", "index": [0], "delta": "1"}
    assert bad.antipode is None


def test_good_basis():
    mu = roots_of_unity(QQ, 3)
    assert not mu.is_good_basis()
    auto, m = good_basis(mu)
    assert auto.is_good_basis()
    assert verify_bialgebra(auto).passed
    expected, m = good_basis(mu, candidate=THIRD_ROOTS_BASIS)
    assert expected.is_good_basis()
    # 1 = b0 - b1 - b2 in the new basis
    assert list(expected.unit) == [QQ(1), QQ(-1), QQ(-1)]
    with pytest.raises(NotGoodBasis):
        good_basis(mu, candidate=np.eye(3, dtype=int).tolist())
    same, m = good_basis(truncated_additive(GF(2), 2))
    assert np.all(m == np.array([[GF(2)(1), GF(2)(0)], [GF(2)(0), GF(2)(1)]], dtype=object))


def test_good_basis_multiplication():
    expected, _ = good_basis(roots_of_unity(QQ, 3), candidate=THIRD_ROOTS_BASIS)
    m = expected.mult
    assert [m[1, 1, l] for l in range(3)] == [QQ(0), QQ("-2/3"), QQ("1/3")]
    assert [m[1, 2, l] for l in range(3)] == [QQ(0), QQ("-1/3"), QQ("-1/3")]
    assert [m[2, 2, l] for l in range(3)] == [QQ(0), QQ("1/3"), QQ("-2/3")]
    c = expected.comult
    assert [c[1, 1, l] for l in range(3)] == [QQ(2), QQ(1), QQ(0)]
    assert [c[1, 2, l] for l in range(3)] == [QQ(-1), QQ(-1), QQ(-1)]


def test_change_basis_round_trip():
    h = truncated_additive(GF(2), 2, 2)
    m = [[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [1, 0, 0, 1]]
    changed = change_basis(h, m)
    assert verify_bialgebra(changed).passed
    back = change_basis(changed, linalg.inverse(m, field=GF(2)))
    assert tensors_equal(back, h)
    with pytest.raises(SingularMatrix):
        change_basis(h, [[1, 0, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(DimensionMismatch):
        change_basis(h, [[1]])


def test_etale_splitting():
    """Over Q(z), z^2+z+1 = 0, the third roots of unity become the constant group Z/3."""
    kz = extension(QQ, "z", "z^2+z+1")
    z = kz.gen
    expected, _ = good_basis(roots_of_unity(QQ, 3), candidate=THIRD_ROOTS_BASIS)
    big = base_change(expected, kz)
    assert big.field == kz
    m2 = [[1, 0, 0], [0, "z^2", "z"], [0, "z", "z^2"]]
    split = change_basis(big, m2)
    assert tensors_equal(split, constant_group(kz, group="cyclic", n=3))
    for i in range(3):
        for j in range(3):
            assert [split.mult[i, j, l] for l in range(3)] == [kz.one() if i == j == l else kz.zero()
                                                             for l in range(3)]

    t = operator_change_matrix(linalg.as_matrix(m2, field=kz), kz)
    d = z - z ** 2
    assert t[0, 0] == kz.one() and t[0, 1] == kz.zero()
    assert t[1, 1] == z ** 2 / d
    assert t[1, 2] == -z / d
    assert t[2, 1] == -z / d
    assert t[2, 2] == z ** 2 / d


def test_product():
    ga = truncated_additive(GF(2), 2)
    c2 = constant_group(GF(2), group="cyclic", n=2)
    p = product(ga, c2)
    assert p.e == 4
    assert p.basis_names == ("(1,e0)", "(1,e1)", "(v,e0)", "(v,e1)")
    assert product_factors(p) == (ga, c2)
    assert verify_bialgebra(p.with_antipode()).passed
    assert p.is_good_basis()
    assert "factors" not in p.to_dict()["metadata"]
    assert p.to_dict()["metadata"]["product"]["e"] == [2, 2]
    # a basis change forgets the factorisation
    m = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1]]
    assert product_factors(change_basis(p, m)) is None


def test_summary_and_dict():
    h = trivial(QQ)
    assert h.table_lines() == ["1*1 = 1", "mu(1) = 1⊗1", "pi(1) = 1", "1 = 1", "S(1) = 1"]
    text = h.summary(do_print=False, do_return=True)
    assert "mu(1) = 1⊗1" in text
    d = truncated_additive(GF(2), 2).to_dict()
    assert d["mult"][1][1] == ["0", "0"]
    assert d["comult"][1][0] == ["0", "1"]
    assert d["e"] == 2


def test_comultiply():
    ga = truncated_additive(GF(2), 2)
    # mu(v) = v (x) 1 + 1 (x) v
    out = ga.comultiply([0, 1])
    assert out[0, 1] == GF(2)(1) and out[1, 0] == GF(2)(1) and out[1, 1] == GF(2)(0)
    assert list(ga.multiply([0, 1], [0, 1])) == [GF(2)(0), GF(2)(0)]


@pytest.mark.parametrize("tensor,index", [("unit", (0,)), ("comult", (1, 1, 1)), ("mult", (1, 2, 0)),
                                          ("counit", (2,))])
def test_stop_at_first_violation(tensor, index):
    h, _ = good_basis(roots_of_unity(QQ, 3), candidate=THIRD_ROOTS_BASIS)
    bad = mutate(h, tensor, index, 1)
    full = verify_bialgebra(bad)
    short = verify_bialgebra(bad, stop_at_first=True)
    assert not full.passed and not short.passed
    first = short.violations[0].law
    assert {v.law for v in short.violations} == {first}
    assert short.failing(first) == full.failing(first)
    assert "good_basis" not in short.details
    assert verify_bialgebra(h, stop_at_first=True).passed
