"""Checks of the action laws and the field of constants."""

import logging

from ..errors import IllDefined
from ..fields import linalg
from ..fields.core import FieldElem
from ..report import Report
from ..util import jsonable
from .core import TwistedTensor

logger = logging.getLogger(__name__)


def counit_report(spec):
    """``d_0 = id`` on every generator (and on the coefficient action)."""
    report = Report("Counit check", laws=("counit",))
    for g in spec.generators:
        if not spec.equal(spec.images[g][0], spec.generator_element(g)):
            report.add_violation("counit", (0,), generator=g, value=str(spec.images[g][0]))
    if spec.coefficient_action is not None:
        report.merge(counit_report(spec.coefficient_action), prefix="coefficient_action")
    return report


def check_counit(spec):
    return counit_report(spec).passed


def check_iterativity(spec):
    """``d_i d_j (x) = sum_l c[i, j, l] d_l(x)`` for every generator ``x`` and every pair ``(i, j)``.

    Both sides are ring homomorphisms into ``R (x) H (x) H``, so generators suffice.
    """
    report = Report("Iterativity check", laws=("iterativity",))
    hopf = spec.hopf
    e = hopf.e
    c = hopf.comult
    for g in spec.generators:
        images = spec.images[g]
        for j in range(e):
            applied = spec.apply(images[j])
            for i in range(e):
                rhs = spec.ring.zero()
                for l in range(e):
                    if not c[i, j, l].is_zero():
                        rhs = rhs + c[i, j, l] * images[l]
                if not spec.equal(applied[i], rhs):
                    report.add_violation("iterativity", (i, j), generator=g,
                                         lhs=str(spec.reduce(applied[i])), rhs=str(spec.reduce(rhs)))
    if spec.coefficient_action is not None:
        report.merge(check_iterativity(spec.coefficient_action), prefix="coefficient_action")
    return report


def well_defined_report(spec):
    """The action respects the presentation of the carrier.

    For a polynomial carrier every component of ``d(f)`` must lie in the relation ideal for each relation ``f``.
    For a field tower, each minimal polynomial evaluated at the image of its root must vanish in ``K (x) H``.
    """
    report = Report("Well-definedness check", laws=("well_defined",))
    if spec.kind == "ring":
        for k, f in enumerate(spec.relations.generators):
            image = spec.apply(f)
            for l in range(spec.e):
                if not spec.relations.contains(image[l]):
                    report.add_violation("well_defined", (k, l), relation=str(f),
                                         normal_form=str(spec.relations.reduce(image[l])))
        if spec.coefficient_action is not None:
            report.merge(well_defined_report(spec.coefficient_action), prefix="coefficient_action")
        return report

    tower = spec.ring.tower
    start = [f == spec.bottom for f in tower].index(True)
    for field in tower[start + 1:]:
        gen = spec.apply(spec.ring.coerce(field.gen))
        value = TwistedTensor.zero(spec.hopf, spec.ring)
        for k, coeff in enumerate(field.minpoly):
            coeff = spec.ring.coerce(FieldElem(field.base, coeff))
            value = value + spec.apply(coeff) * gen ** k
        for l in range(spec.e):
            if not value[l].is_zero():
                report.add_violation("well_defined", (l,), generator=field.name, value=str(value[l]))
    return report


def check_well_defined(spec):
    return well_defined_report(spec).passed


def check_action(spec):
    """Counit, iterativity and well-definedness in one report."""
    report = Report(f"Action check on {spec.ring}", laws=("counit", "iterativity", "well_defined"))
    report.merge(counit_report(spec))
    report.merge(check_iterativity(spec))
    report.merge(well_defined_report(spec))
    return report


class ConstantsResult:
    """Field of constants ``K^g`` of an action on a field tower ``K`` over the bottom field ``F``."""

    def __init__(self, spec, basis, coordinates, dimension, degree):
        self.spec = spec
        self.basis = basis
        self.coordinates = coordinates
        self.dimension = dimension
        self.degree = degree

    @property
    def bound_holds(self):
        """``[K : K^g] <= e``."""
        return self.degree <= self.spec.e

    def is_constant(self, x):
        image = self.spec.apply(x)
        return all(image[i] == u * x for i, u in enumerate(self.spec.hopf.unit))

    def check_closure(self):
        """Products of basis elements and inverses of nonzero basis elements are constants again."""
        report = Report("Closure of constants", laws=("products", "inverses"))
        for a, x in enumerate(self.basis):
            if not x.is_zero() and not self.is_constant(x.inverse()):
                report.add_violation("inverses", (a,), element=str(x))
            for b in range(a, len(self.basis)):
                if not self.is_constant(x * self.basis[b]):
                    report.add_violation("products", (a, b))
        return report

    def to_dict(self):
        return jsonable({
            "field": str(self.spec.ring),
            "over": str(self.spec.bottom),
            "basis": self.basis,
            "dimension": self.dimension,
            "degree": self.degree,
            "e": self.spec.e,
            "degree_at_most_e": self.bound_holds,
        })

    def summary(self, do_print=True, do_return=False):
        msg = (f"Constants of the action on {self.spec.ring}\n"
               f"basis over {self.spec.bottom}: {', '.join(str(b) for b in self.basis)}\n"
               f"[K : K^g] = {self.degree} (e = {self.spec.e})\n")

        if do_print:
            print(msg)

        if do_return:
            return msg

    def __repr__(self):
        return f"ConstantsResult(dimension={self.dimension}, degree={self.degree})"


def constants(spec):
    """Solve ``d_i(x) = u_i x`` for all ``i`` over the bottom field.

    :raises IllDefined: if the spec does not pass the counit, iterativity and well-definedness checks.
    """
    if spec.kind != "field":
        raise ValueError("constants is only available for field-tower carriers")
    check = check_action(spec)
    if not check.passed:
        raise IllDefined(f"The action on {spec.ring} fails its checks: "
                         + "; ".join(str(v) for v in check.violations[:5]))
    field, bottom = spec.ring, spec.bottom
    basis = field.basis_over(bottom)
    d = len(basis)
    images = [spec.apply(b) for b in basis]
    rows = []
    for i, u in enumerate(spec.hopf.unit):
        # column k holds the coordinates of d_i(b_k) - u_i b_k
        cols = [field.coordinates(images[k][i] - u * basis[k], bottom) for k in range(d)]
        rows.extend([cols[k][r] for k in range(d)] for r in range(d))
    kernel = linalg.kernel(rows, field=bottom)
    elements = [field.from_coordinates(v, bottom) for v in kernel]
    dimension = len(kernel)
    if dimension == 0:
        raise IllDefined(f"The action on {field} does not fix 1; check the unit of the Hopf algebra")
    degree = d // dimension
    logger.info(f"constants of {field}: dimension {dimension} over {bottom}, degree {degree}")
    result = ConstantsResult(spec, elements, kernel, dimension, degree)
    if not result.bound_holds:
        logger.warning(f"[K : K^g] = {degree} exceeds e = {spec.e}")
    return result
