import pytest

from pyhopf.errors import IllDefined, PointNotOnVariety, RingMismatch
from pyhopf.fields import QQ, GF, extension
from pyhopf.gsa import OperatorSpec, check_action
from pyhopf.hopf import constant_group, good_basis, multiplicative_kernel, roots_of_unity, truncated_additive
from pyhopf.poly import PolyRing
from pyhopf.prolong import (Variety, c_map, canonical_operator, check_l2, l2_report, nabla_names, nabla_point,
                            nabla_ring, prolongation_ideal)

THIRD_ROOTS_BASIS = [["1/3", "1/3", "1/3"], ["-1/3", "1/3", "0"], ["-1/3", "0", "1/3"]]


@pytest.fixture
def ga():
    return truncated_additive(GF(2), 2)


@pytest.fixture
def third_roots():
    h, _ = good_basis(roots_of_unity(QQ, 3), candidate=THIRD_ROOTS_BASIS)
    return h


@pytest.fixture
def cbrt2(third_roots):
    k = extension(QQ, "c", "c^3-2")
    spec = OperatorSpec(third_roots, k, {"c": ["c", "2*c", "-c"]})
    variety = Variety(third_roots, PolyRing(k, ["X"]), ["X^3-2"], field_action=spec)
    return spec, variety


def test_names():
    assert nabla_names(["X", "Y"], 2) == ["X_0", "Y_0", "X_1", "Y_1"]
    assert nabla_names(nabla_names(["X"], 2), 2) == ["X_0_0", "X_1_0", "X_0_1", "X_1_1"]


def test_canonical_operator_truncated_additive(ga):
    spec = canonical_operator(ga, 1)
    r = spec.ring
    assert r.variables == ("X_0", "X_1")
    assert spec.images["X_0"] == (r.gen("X_0"), r.gen("X_1"))
    assert spec.images["X_1"] == (r.gen("X_1"), r.zero())
    assert check_action(spec).passed


def test_canonical_operator_multiplicative_kernel():
    spec = canonical_operator(multiplicative_kernel(GF(2), 2), 1)
    r = spec.ring
    assert spec.images["X_0"][1] == r.gen("X_1")
    assert spec.images["X_1"][1] == r.gen("X_1")
    assert check_action(spec).passed


def test_canonical_operator_constant_group():
    h = constant_group(QQ, group="symmetric", n=3)
    spec = canonical_operator(h, ["Y"])
    table = h.metadata["table"]
    for i in range(6):
        for j in range(6):
            assert spec.images[f"Y_{j}"][i] == spec.ring.gen(f"Y_{table[i][j]}")
    assert check_action(spec).passed


def test_affine_space(ga):
    variety = Variety(ga, PolyRing(GF(2), ["X", "Y"]))
    nabla = prolongation_ideal(variety)
    assert nabla.ring.nvars == 4
    assert nabla.ideal.is_zero()
    assert nabla.projection([1, 2, 3, 4]) == [1, 2]


def test_parabola(ga):
    variety = Variety(ga, PolyRing(GF(2), ["X", "Y"]), ["Y-X^2"])
    nabla = prolongation_ideal(variety)
    r = nabla.ring
    assert r == nabla_ring(variety)
    assert nabla.ideal.generators == [r.convert("Y_0-X_0^2"), r.convert("Y_1")]
    assert nabla.to_dict()["variables"] == ["X_0", "Y_0", "X_1", "Y_1"]
    assert check_action(nabla.operator()).passed
    assert nabla.as_variety().n == 4


def test_cube_root_prolongation(cbrt2):
    spec, variety = cbrt2
    nabla = prolongation_ideal(variety)
    r = nabla.ring
    assert nabla.components[0][0] == r.convert("X_0^3-2")
    assert nabla.components[0][1] == r.convert("1/3*X_1^3+X_1^2*X_2-1/3*X_2^3+2")
    assert nabla.components[0][2] == r.convert("-1/3*X_1^3+X_1*X_2^2+1/3*X_2^3+2")
    assert len(nabla.ideal.generators) == 3

    c = spec.ring.gen
    point = nabla_point(spec, variety, [c])
    assert point == [c, 2 * c, -c]
    assert all(g.evaluate(point).is_zero() for g in nabla.ideal.generators)
    with pytest.raises(PointNotOnVariety):
        nabla_point(spec, variety, [spec.ring.one()])


def test_l2_on_cube_root(cbrt2):
    spec, variety = cbrt2
    c = spec.ring.gen
    report = l2_report(spec, variety, [c])
    assert report.passed
    assert report["point"] == [str(c), str(2 * c), str(-c)]
    assert check_l2(spec, variety, [c])


def test_variety_needs_field_action(third_roots):
    k = extension(QQ, "c", "c^3-2")
    with pytest.raises(RingMismatch):
        Variety(third_roots, PolyRing(k, ["X"]), ["X^3-2"])
    bad = OperatorSpec(third_roots, k, {"c": ["c", "c", "c"]})
    with pytest.raises(IllDefined):
        Variety(third_roots, PolyRing(k, ["X"]), ["X^3-2"], field_action=bad)


def test_c_map(ga):
    cmap = c_map(ga, 1)
    s = cmap.source
    assert cmap.target.variables == ("X_0_0", "X_1_0", "X_0_1", "X_1_1")
    assert cmap.coordinates() == [s.gen("X_0"), s.gen("X_1"), s.gen("X_1"), s.zero()]
    assert cmap.projection_is_identity()
    one, zero = GF(2).one(), GF(2).zero()
    assert cmap.matrix() == [[one, zero], [zero, one], [zero, one], [zero, zero]]
    assert cmap([GF(2)(1), GF(2)(0)]) == [one, zero, zero, zero]
    with pytest.raises(RingMismatch):
        cmap([one])
    assert cmap.pullback(cmap.target.convert("X_1_0*X_0_1+X_1_1")) == s.convert("X_1^2")


def test_c_map_third_roots(third_roots):
    cmap = c_map(third_roots, 1)
    assert len(cmap.coordinates()) == 9
    s = cmap.source
    # coordinate (1, X_1) is 2 X_0 + X_1
    assert cmap.images["X_1_1"] == s.convert("2*X_0+X_1")
    assert cmap.images["X_2_1"] == s.convert("-X_0-X_1-X_2")
    assert cmap.projection_is_identity()
