"""Prolongations of affine varieties under an action of a finite group scheme.

For a variety ``V`` in ``K[X_1, ..., X_n]`` the prolongation lives in the variables ``X_j_i`` (level ``i < e``),
ordered level-major: ``X1_0, ..., Xn_0, X1_1, ..., Xn_1, ...``. Its ideal is generated by the components of the
generators of ``I(V)`` after substituting ``X_j -> (X_j_0, ..., X_j_{e-1})`` in the twisted tensor ring, with the
coefficients acted on by the field action of ``K``. Prolonging twice gives the variables ``X_j_k_i`` with ``i``
the outer level.

The canonical operator on the prolongation variables is ``d_i(X_j_k) = sum_l c[i, k, l] X_j_l``, and the same
coefficients define the linear map ``c_V``: the coordinate ``(i, X_j_k)`` of the second prolongation is sent to
``sum_l c[i, k, l] X_j_l``.
"""

import logging

from ..errors import ChecksNotPassed, EmptyVariety, IllDefined, PointNotOnVariety, RingMismatch
from ..gsa.checks import check_action
from ..gsa.core import OperatorSpec, TwistedTensor, twisted_image
from ..poly.core import PolyRing, Poly
from ..poly.groebner import Ideal
from ..report import Report

logger = logging.getLogger(__name__)

ASSUMPTIONS = (
    "irreducibility assumed",
    "containments certified for the presented ideals, radicals are not computed",
)


def nabla_names(names, e):
    return [f"{v}_{i}" for i in range(e) for v in names]


def default_names(n):
    return ["X"] if n == 1 else [f"X{j}" for j in range(1, n + 1)]


def _names(n_or_names):
    if isinstance(n_or_names, int):
        return default_names(n_or_names)
    return list(n_or_names)


class Variety:
    """Affine variety ``V`` in ``K^n``, presented by equations, over a field ``K`` with an action of ``hopf``.

    :param hopf: the acting Hopf algebra, in a good basis.
    :param ring: :class:`~pyhopf.poly.PolyRing` over ``K``.
    :param equations: generators of ``I(V)`` (polynomials or strings); zero generators are dropped.
    :param field_action: :class:`~pyhopf.gsa.OperatorSpec` on ``K``; omit it when ``K`` is ``hopf.field``.

    ``V`` is assumed to be irreducible; this is not checked.
    """

    def __init__(self, hopf, ring, equations=(), field_action=None):
        if field_action is not None:
            if field_action.ring != ring.field:
                raise RingMismatch(f"Field action on {field_action.ring}, variety over {ring.field}")
            check = check_action(field_action)
            if not check.passed:
                raise IllDefined(f"The action on {ring.field} fails its checks: {check.violations[0]}")
        elif ring.field != hopf.field:
            raise RingMismatch(f"A variety over {ring.field} needs a field action over {hopf.field}")
        self.hopf = hopf
        self.ring = ring
        self.field_action = field_action
        gens = [ring.convert(f) for f in equations]
        self.ideal = Ideal(ring, [g for g in gens if not g.is_zero()])

    @property
    def n(self):
        return self.ring.nvars

    @property
    def equations(self):
        return list(self.ideal.generators)

    @property
    def field(self):
        return self.ring.field

    def scalar_image(self, ring):
        """Coefficient map ``c -> d(c)`` into ``ring (x) H``."""
        if self.field_action is None:
            return lambda c: TwistedTensor(self.hopf, ring, [ring.constant(u * c) for u in self.hopf.unit])
        return lambda c: self.field_action.apply(c).map(ring.constant, ring=ring)

    def contains_point(self, point, equal=None):
        if equal is None:
            def equal(x, y):
                return x == y
        point = list(point)
        if len(point) != self.n:
            raise RingMismatch(f"Point has {len(point)} coordinates, variety lives in {self.n} variables")
        return all(equal(f.evaluate(point), 0) for f in self.ideal.generators)

    def __repr__(self):
        return f"Variety({self.ring}, {[str(f) for f in self.ideal.generators]})"


def nabla_ring(variety):
    return PolyRing(variety.field, nabla_names(variety.ring.variables, variety.hopf.e), order=variety.ring.order)


def canonical_operator(hopf, n_or_names, field_action=None, relations=None):
    """The action ``d_i(X_j_k) = sum_l c[i, k, l] X_j_l`` on the prolongation variables.

    :param n_or_names: number of coordinates (named ``X`` or ``X1..Xn``) or the list of coordinate names.
    """
    names = _names(n_or_names)
    e = hopf.e
    field = hopf.field if field_action is None else field_action.ring
    if isinstance(relations, Ideal):
        ring = relations.ring
    else:
        ring = PolyRing(field, nabla_names(names, e))
    images = {}
    for k in range(e):
        for v in names:
            values = []
            for i in range(e):
                total = ring.zero()
                for l in range(e):
                    if not hopf.comult[i, k, l].is_zero():
                        total = total + hopf.comult[i, k, l] * ring.gen(f"{v}_{l}")
                values.append(total)
            images[f"{v}_{k}"] = values
    return OperatorSpec(hopf, ring, images, relations=relations, coefficient_action=field_action)


class ProlongationVariety:
    """``nabla(V)`` with its generators grouped by source generator.

    ``components[k][l]`` is the ``l``-th component of the ``k``-th generator of ``I(V)``; the ideal is generated
    by the nonzero ones, generator-major.
    """

    def __init__(self, source, ring, components):
        self.source = source
        self.ring = ring
        self.components = components
        gens = [c for comp in components for c in comp if not c.is_zero()]
        self.ideal = Ideal(ring, gens)

    @property
    def hopf(self):
        return self.source.hopf

    def operator(self):
        """The canonical operator on ``K[nabla(V)]``."""
        return canonical_operator(self.hopf, self.source.ring.variables, field_action=self.source.field_action,
                                  relations=self.ideal)

    def as_variety(self):
        return Variety(self.hopf, self.ring, self.ideal.generators, field_action=self.source.field_action)

    def projection(self, point):
        """``pi_V``: the level-0 coordinates."""
        return list(point)[:self.source.n]

    def to_dict(self):
        return {
            "variables": list(self.ring.variables),
            "generators": [str(g) for g in self.ideal.generators],
            "components": [[str(c) for c in comp] for comp in self.components],
        }

    def __repr__(self):
        return f"ProlongationVariety({self.ring}, {len(self.ideal.generators)} generators)"


def prolongation_ideal(variety):
    ring = nabla_ring(variety)
    e = variety.hopf.e
    var_images = [TwistedTensor(variety.hopf, ring, [ring.gen(f"{v}_{i}") for i in range(e)])
                  for v in variety.ring.variables]
    scalar = variety.scalar_image(ring)
    components = [list(twisted_image(f, var_images, scalar, variety.hopf, ring)) for f in variety.ideal.generators]
    return ProlongationVariety(variety, ring, components)


class CMap:
    """The linear map ``c_V`` from ``nabla(V)`` coordinates to ``nabla(nabla(V))`` coordinates."""

    def __init__(self, hopf, names, field=None):
        self.hopf = hopf
        self.names = list(names)
        field = hopf.field if field is None else field
        e = hopf.e
        self.source = PolyRing(field, nabla_names(self.names, e))
        self.target = PolyRing(field, nabla_names(self.source.variables, e))
        self.images = {}
        for i in range(e):
            for k in range(e):
                for v in self.names:
                    total = self.source.zero()
                    for l in range(e):
                        if not hopf.comult[i, k, l].is_zero():
                            total = total + hopf.comult[i, k, l] * self.source.gen(f"{v}_{l}")
                    self.images[f"{v}_{k}_{i}"] = total

    def coordinates(self):
        """Images of the target coordinates, in target variable order."""
        return [self.images[v] for v in self.target.variables]

    def matrix(self):
        """Rows: target coordinates; columns: source coordinates."""
        return [[p.coefficient(tuple(int(a == b) for b in range(self.source.nvars)))
                 for a in range(self.source.nvars)] for p in self.coordinates()]

    def __call__(self, point):
        point = list(point)
        if len(point) != self.source.nvars:
            raise RingMismatch(f"Expected {self.source.nvars} coordinates, got {len(point)}")
        return [p.evaluate(point) for p in self.coordinates()]

    def pullback(self, g):
        """``g o c_V`` for a polynomial ``g`` in the second prolongation variables."""
        if g.ring != self.target:
            g = self.target.convert(g)
        return g.substitute(self.images, target_ring=self.source)

    def projection_is_identity(self):
        """``pi o c_V = id``: the outer level 0 coordinates are sent to themselves."""
        return all(self.images[f"{v}_0"] == self.source.gen(v) for v in self.source.variables)

    def to_dict(self):
        return {
            "source": list(self.source.variables),
            "target": list(self.target.variables),
            "coordinates": [str(p) for p in self.coordinates()],
        }


def c_map(hopf, n_or_names, field=None):
    return CMap(hopf, _names(n_or_names), field=field)


# points
# ======
def nabla_point(spec, variety, point, check=True):
    """``(d_i(a_j))`` in level-major order for a point ``a`` of ``V`` with coordinates in the carrier of ``spec``.

    :raises PointNotOnVariety: if ``check`` and ``a`` does not satisfy the equations of ``V``.
    """
    point = [spec.ring.convert(x) for x in point]
    if check and not variety.contains_point(point, equal=spec.equal):
        raise PointNotOnVariety(f"({', '.join(str(x) for x in point)}) is not a point of {variety}")
    images = [spec.apply(x) for x in point]
    return [images[j][i] for i in range(spec.e) for j in range(len(point))]


def l2_report(spec, variety, point):
    """Compare ``d_{nabla V}(d_V(a))`` with ``c_V(d_V(a))`` coordinatewise."""
    report = Report("Prolongation of a point", laws=("l2",))
    first = nabla_point(spec, variety, point)
    lhs = nabla_point(spec, None, first, check=False)
    cmap = c_map(variety.hopf, variety.ring.variables, field=spec.ring if spec.kind == "field" else spec.ring.field)
    rhs = cmap(first)
    for k, (a, b) in enumerate(zip(lhs, rhs)):
        if not spec.equal(a, b):
            report.add_violation("l2", divmod(k, len(first)), lhs=str(spec.reduce(a)), rhs=str(spec.reduce(b)))
    report.details["point"] = [str(spec.reduce(x)) for x in first]
    return report


def check_l2(spec, variety, point):
    return l2_report(spec, variety, point).passed


# geometric axioms
# ================
class AxiomInstance:
    """A pair ``(V, W)`` with ``W`` given by equations in the prolongation variables of ``V``."""

    def __init__(self, variety, w_equations):
        self.variety = variety
        self.nabla_v = prolongation_ideal(variety)
        self.ring = self.nabla_v.ring
        self.w = Variety(variety.hopf, self.ring, w_equations, field_action=variety.field_action)
        if self.w.ideal.is_unit():
            raise EmptyVariety(f"W = V({', '.join(str(g) for g in self.w.equations)}) is empty")
        self.cmap = c_map(variety.hopf, variety.ring.variables, field=variety.field)


def check_axiom_instance(variety, w_equations):
    """Check ``W in nabla(V)`` and ``c_V(W) in nabla(W)`` on presented ideals.

    Failing generators are reported with their normal forms modulo ``I(W)`` as certificates.

    :raises EmptyVariety: if ``I(W)`` is the unit ideal.
    """
    instance = w_equations if isinstance(w_equations, AxiomInstance) else AxiomInstance(variety, w_equations)
    w_ideal = instance.w.ideal
    report = Report("Geometric axiom instance", laws=("W_in_nablaV", "cW_in_nablaW"))
    for k, g in enumerate(instance.nabla_v.ideal.generators):
        nf = w_ideal.reduce(g)
        if not nf.is_zero():
            report.add_violation("W_in_nablaV", (k,), generator=str(g), normal_form=str(nf))

    nabla_w = prolongation_ideal(instance.w)
    certificates = []
    for k, g in enumerate(nabla_w.ideal.generators):
        pulled = instance.cmap.pullback(g)
        nf = w_ideal.reduce(pulled)
        certificates.append({"generator": str(g), "pullback": str(pulled), "normal_form": str(nf)})
        if not nf.is_zero():
            report.add_violation("cW_in_nablaW", (k,), generator=str(g), normal_form=str(nf))
    report.details["nabla_V"] = [str(g) for g in instance.nabla_v.ideal.generators]
    report.details["W"] = [str(g) for g in w_ideal.generators]
    report.details["nabla_W"] = [str(g) for g in nabla_w.ideal.generators]
    report.details["certificates"] = certificates
    report.notes.extend(ASSUMPTIONS)
    return report


class GenericPoint:
    """The action on ``K[W]`` read off from ``c_V``, with its check report."""

    def __init__(self, spec, report, point):
        self.spec = spec
        self.report = report
        self.point = point

    def to_dict(self):
        d = self.report.to_dict()
        d["operator"] = self.spec.to_dict()
        d["point"] = [str(self.spec.reduce(x)) for x in self.point]
        return d

    def summary(self, do_print=True, do_return=False):
        msg = self.report.summary(do_print=False, do_return=True)
        for g in self.spec.generators:
            values = ", ".join(str(self.spec.reduce(v)) for v in self.spec.images[g])
            msg += f"d({g}) = ({values})\n"

        if do_print:
            print(msg)

        if do_return:
            return msg


def generic_point_operator(variety, w_equations):
    """Action on ``K[W]`` with ``d'_i(X_j_k) = c_V`` coordinate ``(i, X_j_k)`` reduced modulo ``I(W)``.

    The result is checked for counit, iterativity and well-definedness, and the generic point ``b`` (the level-0
    coordinates) must satisfy ``d'_V(b) in W``.

    :raises ChecksNotPassed: if the axiom instance or any of these checks fails.
    """
    instance = AxiomInstance(variety, w_equations)
    axiom = check_axiom_instance(variety, instance)
    if not axiom.passed:
        raise ChecksNotPassed("The instance fails the containment checks: "
                              + "; ".join(str(v) for v in axiom.violations[:5]))
    w_ideal = instance.w.ideal
    hopf = variety.hopf
    e = hopf.e
    images = {}
    for v in instance.ring.variables:
        images[v] = [w_ideal.reduce(instance.cmap.images[f"{v}_{i}"]) for i in range(e)]
    spec = OperatorSpec(hopf, instance.ring, images, relations=w_ideal, coefficient_action=variety.field_action)

    report = Report("Generic point operator", laws=("counit", "iterativity", "well_defined", "point_in_W"))
    report.merge(axiom)
    report.merge(check_action(spec))
    generic = [instance.ring.gen(f"{v}_0") for v in variety.ring.variables]
    point = nabla_point(spec, variety, generic)
    for k, f in enumerate(w_ideal.generators):
        value = f.evaluate(point)
        if not spec.equal(value, 0):
            report.add_violation("point_in_W", (k,), generator=str(f), normal_form=str(spec.reduce(value)))
    if not report.passed:
        raise ChecksNotPassed("The generic point operator fails its checks: "
                              + "; ".join(str(v) for v in report.violations[:5]))
    logger.info(f"generic point operator on {instance.ring} passed all checks")
    return GenericPoint(spec, report, point)
