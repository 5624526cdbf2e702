import os

import pytest

from pyhopf.document import load
from pyhopf.fields import QQ, GF, extension
from pyhopf.gsa import OperatorSpec
from pyhopf.hopf import (constant_group, good_basis, multiplicative_kernel, mutate, product, roots_of_unity, trivial,
                         truncated_additive)
from pyhopf.poly import PolyRing
from pyhopf.prolong import Variety
from pyhopf.sampling import is_hopf_algebra, l2_sample, mutation_harness

THIRD_ROOTS_BASIS = [["1/3", "1/3", "1/3"], ["-1/3", "1/3", "0"], ["-1/3", "0", "1/3"]]
PROBLEMS = os.path.join(os.path.dirname(__file__), "problems")


def test_mutations_of_trivial_scheme():
    report = mutation_harness(trivial(QQ), samples=30, seed=3)
    assert report.passed
    assert report["caught"] == 30
    assert report["rate"] == "30/30"


def test_mutation_harness_is_deterministic():
    h = constant_group(GF(3), group="cyclic", n=3)
    first = mutation_harness(h, samples=25, seed=11)
    second = mutation_harness(h, samples=25, seed=11)
    assert first.to_dict() == second.to_dict()
    assert first["caught"] + len(first["degenerate"]) == 25


def test_mutation_defaults_from_config():
    report = mutation_harness(trivial(GF(2)))
    assert report["seed"] == 0
    assert report["samples"] == 200


def test_is_hopf_algebra():
    assert is_hopf_algebra(truncated_additive(GF(2), 2))
    assert not is_hopf_algebra(mutate(trivial(QQ), "mult", (0, 0, 0), 1))


def test_l2_on_cube_root():
    h, _ = good_basis(roots_of_unity(QQ, 3), candidate=THIRD_ROOTS_BASIS)
    spec = OperatorSpec(h, extension(QQ, "c", "c^3-2"), {"c": ["c", "2*c", "-c"]})
    report = l2_sample(spec, n=2, points=15, seed=5)
    assert report.passed, report.summary(do_print=False, do_return=True)
    assert report["skipped"] == 0


def test_l2_on_product_action():
    h = product(truncated_additive(GF(2), 2), constant_group(GF(2), group="cyclic", n=2))
    ring = PolyRing(GF(2), ["a", "b"])
    spec = OperatorSpec(h, ring, {"a": ["a", "b", "1", "1"], "b": ["b", "a", "1", "1"]})
    report = l2_sample(spec, n=1, points=10, seed=2)
    assert report.passed
    assert report["points"] == 10


def test_l2_solves_for_points_on_the_variety():
    ga = truncated_additive(GF(2), 2)
    spec = OperatorSpec(ga, GF(2), {})
    variety = Variety(ga, PolyRing(GF(2), ["X"]), ["X"])
    report = l2_sample(spec, points=40, seed=1, variety=variety)
    assert report.passed
    assert report["skipped"] == 0
    assert report["evaluated"] == 40


def _acceptance_schemes():
    schemes = [("trivial", trivial(QQ))]
    for n in range(2, 7):
        schemes.append((f"C{n}", constant_group(QQ, group="cyclic", n=n)))
    schemes.append(("S3", constant_group(QQ, group="symmetric", n=3)))
    schemes.append(("klein", constant_group(GF(2), group="klein")))
    for p in (2, 3):
        for m in (1, 2):
            schemes.append((f"Ga[{m}] p={p}", truncated_additive(GF(p), p, m)))
        schemes.append((f"Gm[1] p={p}", multiplicative_kernel(GF(p), p)))
    for n in (2, 3, 4):
        schemes.append((f"mu{n}", roots_of_unity(QQ, n)))
    schemes.append(("Ga[1] x Z/2", product(truncated_additive(GF(2), 2), constant_group(GF(2), group="cyclic", n=2))))
    return schemes


@pytest.mark.slow
@pytest.mark.parametrize("name,h", _acceptance_schemes())
def test_mutation_rate_with_default_seed(name, h):
    report = mutation_harness(h, samples=200, seed=0)
    assert report.passed, report.summary(do_print=False, do_return=True)
    effective = 200 - len(report["degenerate"])
    assert effective > 0
    assert report["caught"] / effective >= 0.99
    assert report["rate"] == f"{report['caught']}/{effective}"


def test_degenerate_mutations_leave_the_rate():
    report = mutation_harness(truncated_additive(GF(2), 2), samples=60, seed=0)
    assert report.passed
    assert report["caught"] + len(report["degenerate"]) == 60
    assert report["rate"] == f"{report['caught']}/{60 - len(report['degenerate'])}"


def test_cube_root_without_points_fails():
    h, _ = good_basis(roots_of_unity(QQ, 3), candidate=THIRD_ROOTS_BASIS)
    k = extension(QQ, "c", "c^3-2")
    spec = OperatorSpec(h, k, {"c": ["c", "2*c", "-c"]})
    cube = Variety(h, PolyRing(k, ["X"]), ["X^3-2"], field_action=spec)
    report = l2_sample(spec, points=5, seed=0, variety=cube)
    assert not report.passed
    assert report.failing("no-points") == [()]
    assert report["evaluated"] == 0

    report = l2_sample(spec, points=5, seed=0, variety=cube, known_points=[[k.gen]])
    assert report.passed
    assert report["evaluated"] == 5


def test_min_points_zero_accepts_empty_sample():
    ga = truncated_additive(GF(2), 2)
    spec = OperatorSpec(ga, GF(2), {})
    empty = Variety(ga, PolyRing(GF(2), ["X"]), ["X^2+X+1"])
    report = l2_sample(spec, points=3, seed=0, variety=empty, min_points=0)
    assert report.passed
    assert report["skipped"] == 3


def test_points_on_parabola_over_a_ring_carrier():
    ga = truncated_additive(GF(2), 2)
    ring = PolyRing(GF(2), ["x", "y"])
    spec = OperatorSpec(ga, ring, {"x": ["x", "y"], "y": ["y", "0"]}, relations=["y-x^2"])
    parabola = Variety(ga, PolyRing(GF(2), ["X", "Y"]), ["Y-X^2"])
    report = l2_sample(spec, points=20, seed=3, variety=parabola)
    assert report.passed, report.summary(do_print=False, do_return=True)
    assert report["evaluated"] == 20


SHIPPED_L2 = [
    ("third_roots.json", "cbrt2", None, 2),
    ("third_roots.json", "cbrt2", "cube", 1),
    ("additive.json", "swap", None, 1),
    ("additive.json", "parabola", "parabola", 2),
]


@pytest.mark.slow
@pytest.mark.parametrize("file,operator,variety,n", SHIPPED_L2)
def test_l2_on_shipped_problems(file, operator, variety, n):
    doc = load(os.path.join(PROBLEMS, file))
    spec = doc.operator(operator)
    v = None if variety is None else doc.variety(variety)
    known = [[spec.ring.gen]] if variety == "cube" else []
    report = l2_sample(spec, n=n, points=100, seed=0, variety=v, known_points=known)
    assert report.passed, report.summary(do_print=False, do_return=True)
    assert report["evaluated"] == 100
