"""Seeded sampling harnesses: structure-constant mutations and prolongations of random points.

Both harnesses draw from ``numpy.random.default_rng(seed)``; with the same seed they visit the same cases.
"""

import logging

import numpy as np

from . import config
from .errors import NoAntipode
from .hopf.core import TENSORS, mutate, solve_antipode, verify_bialgebra
from .prolong.core import Variety, c_map, nabla_point
from .poly.core import Poly, PolyRing
from .report import Report

logger = logging.getLogger(__name__)


def _seed(seed):
    return config.get("sampling.seed") if seed is None else seed


def is_hopf_algebra(h):
    if not verify_bialgebra(h, stop_at_first=True).passed:
        return False
    try:
        solve_antipode(h)
    except NoAntipode:
        return False
    return True


def mutation_harness(h, samples=None, seed=None, delta=1, min_rate=0.99):
    """Shift random single structure constants of ``h`` by ``delta`` and check that the axioms notice.

    A mutation is *caught* if the bialgebra check fails or no antipode exists; otherwise it is *degenerate*: the
    mutated data is again a Hopf algebra. Degenerate mutations are logged and listed but left out of the rate
    ``caught / (samples - degenerate)``. The report fails if that rate is below ``min_rate``, or if every mutation
    was degenerate.
    """
    samples = config.get("sampling.mutation_samples") if samples is None else samples
    seed = _seed(seed)
    rng = np.random.default_rng(seed)
    shapes = [(t, getattr(h, t).shape) for t in TENSORS]
    sizes = np.array([int(np.prod(s)) for _, s in shapes])

    report = Report(f"Mutation harness, {samples} samples (seed {seed})", laws=("caught_rate",))
    caught, degenerate = 0, []
    for k in range(samples):
        which = int(rng.choice(len(shapes), p=sizes / sizes.sum()))
        tensor, shape = shapes[which]
        index = tuple(int(rng.integers(0, n)) for n in shape)
        mutated = mutate(h, tensor, index, delta)
        if is_hopf_algebra(mutated):
            logger.info(f"degenerate mutation {tensor}{list(index)} + {delta}")
            degenerate.append({"sample": k, "tensor": tensor, "index": list(index)})
        else:
            caught += 1
    effective = samples - len(degenerate)
    if samples and not effective:
        report.add_violation("caught_rate", (), caught=0, effective=0, reason="every mutation was degenerate")
    elif effective and caught / effective < min_rate:
        report.add_violation("caught_rate", (), caught=caught, effective=effective)
    report.details.update({
        "seed": seed,
        "samples": samples,
        "caught": caught,
        "degenerate": degenerate,
        "rate": f"{caught}/{effective}",
    })
    return report


def random_carrier_point(spec, n, rng, degree=None):
    """``n`` random elements of the carrier of ``spec``, reduced modulo its relations."""
    if spec.kind == "field":
        return [spec.ring.random_element(rng) for _ in range(n)]
    degree = config.get("sampling.poly_degree") if degree is None else degree
    return [spec.reduce(spec.ring.random_element(rng, degree=degree)) for _ in range(n)]


def _last_coordinates(f, head, spec):
    """Values ``x`` in the carrier with ``f(head, x) = 0``.

    Returns ``None`` if ``f(head, X)`` vanishes identically. Otherwise the roots are found when ``X`` occurs
    linearly with a unit coefficient, or by enumeration over a finite carrier field; other cases give ``[]``.
    """
    ring = f.ring
    last = ring.nvars - 1
    parts = {}
    for m, c in f.terms.items():
        parts.setdefault(m[last], {})[m[:last] + (0,)] = c
    values = list(head) + [spec.ring.zero()]
    coeffs = {}
    for d, terms in parts.items():
        c = spec.reduce(Poly(ring, terms).evaluate(values))
        if not spec.equal(c, 0):
            coeffs[d] = c
    if not coeffs:
        return None
    top = max(coeffs)
    if top == 0:
        return []
    a0 = coeffs.get(0, spec.ring.zero())
    if top == 1:
        a1 = coeffs[1]
        if spec.kind == "field":
            return [-a0 / a1]
        if a1.is_constant():
            return [spec.reduce(-a0 / a1.constant_value())]
    if spec.kind == "field" and spec.ring.is_finite:
        return [x for x in spec.ring.elements()
                if spec.equal(sum((c * x ** d for d, c in coeffs.items()), spec.ring.zero()), 0)]
    return []


def random_variety_point(spec, variety, rng, degree=None, known_points=(), attempts=None):
    """A random point of ``variety`` with coordinates in the carrier of ``spec``, or ``None``.

    The first ``n - 1`` coordinates are drawn at random and the last one is solved from the equations. After
    ``attempts`` failures a point is drawn from ``known_points`` instead.
    """
    attempts = config.get("sampling.point_attempts") if attempts is None else attempts
    n = variety.n
    for _ in range(attempts):
        head = random_carrier_point(spec, n - 1, rng, degree=degree)
        candidates = None
        for f in variety.equations:
            candidates = _last_coordinates(f, head, spec)
            if candidates is not None:
                break
        if candidates is None:
            candidates = random_carrier_point(spec, 1, rng, degree=degree)
        candidates = [x for x in candidates if variety.contains_point(head + [x], equal=spec.equal)]
        if candidates:
            return head + [candidates[int(rng.integers(len(candidates)))]]
    known = [list(p) for p in known_points if variety.contains_point(p, equal=spec.equal)]
    if known:
        return known[int(rng.integers(len(known)))]
    return None


def l2_sample(spec, n=2, points=None, seed=None, variety=None, degree=None, known_points=(), min_points=None):
    """Compare ``d_{nabla V}(d_V(a))`` and ``c_V(d_V(a))`` on random points ``a`` of ``V``.

    Without ``variety`` the points are taken on affine ``n``-space over the coefficient field of the carrier.
    Points are generated by :func:`random_variety_point`; draws that find no point are counted as skipped.

    :param known_points: points of ``variety`` to fall back on when none can be solved for.
    :param min_points: the report fails with a ``no-points`` violation if fewer points were evaluated;
        ``sampling.l2_min_points`` if omitted.
    """
    points = config.get("sampling.l2_points") if points is None else points
    min_points = config.get("sampling.l2_min_points") if min_points is None else min_points
    seed = _seed(seed)
    rng = np.random.default_rng(seed)
    field = spec.ring if spec.kind == "field" else spec.ring.field
    if variety is None:
        names = ["X"] if n == 1 else [f"X{j}" for j in range(1, n + 1)]
        variety = Variety(spec.hopf, PolyRing(field, names), [],
                          field_action=spec if spec.kind == "field" and field != spec.hopf.field
                          else spec.coefficient_action)
    known_points = [[spec.reduce(x) for x in p] for p in known_points]
    cmap = c_map(spec.hopf, variety.ring.variables, field=field)

    report = Report(f"Prolongation identity on {points} random points (seed {seed})", laws=("l2", "no-points"))
    skipped = 0
    for k in range(points):
        a = random_variety_point(spec, variety, rng, degree=degree, known_points=known_points)
        if a is None:
            skipped += 1
            continue
        first = nabla_point(spec, variety, a, check=False)
        lhs = nabla_point(spec, None, first, check=False)
        rhs = cmap(first)
        bad = [i for i, (x, y) in enumerate(zip(lhs, rhs)) if not spec.equal(x, y)]
        if bad:
            report.add_violation("l2", (k,), point=[str(x) for x in a], coordinates=bad)
    evaluated = points - skipped
    if evaluated < min_points:
        report.add_violation("no-points", (), evaluated=evaluated, required=min_points)
    report.details.update({"seed": seed, "points": points, "evaluated": evaluated, "skipped": skipped})
    return report
