"""Actions of product group schemes ``H1 x H2``.

In the product basis ``b_i (x) b'_j`` (index ``i * e2 + j``) the operator ``d_(i,j)`` of an action restricts to the
factor actions ``d1_i = d_(i,0)`` and ``d2_j = d_(0,j)``. Iterativity of the full action forces
``d_(i,0) o d_(0,j) = d_(i,j) = d_(0,j) o d_(i,0)``: the two factor actions commute.
"""

from ..errors import NotAProduct, RingMismatch
from ..hopf.core import product, product_factors
from ..report import Report
from .checks import check_action
from .core import OperatorSpec


def _split_coefficient_action(spec):
    if spec.coefficient_action is None:
        return None, None
    a1, a2, _ = decompose_product_action(spec.coefficient_action)
    return a1, a2


def decompose_product_action(spec):
    """Split an action of ``H1 x H2`` into its factor actions and check that they commute.

    :returns: ``(spec1, spec2, report)``.
    :raises NotAProduct: if ``spec.hopf`` was not built by :func:`~pyhopf.hopf.product` in its current basis.
    """
    factors = product_factors(spec.hopf)
    if factors is None:
        raise NotAProduct("The Hopf algebra of this action carries no product structure")
    h1, h2 = factors
    e1, e2 = h1.e, h2.e

    images1 = {g: [spec.images[g][i * e2] for i in range(e1)] for g in spec.generators}
    images2 = {g: [spec.images[g][j] for j in range(e2)] for g in spec.generators}
    ca1, ca2 = _split_coefficient_action(spec)
    spec1 = OperatorSpec(h1, spec.ring, images1, relations=spec.relations, coefficient_action=ca1)
    spec2 = OperatorSpec(h2, spec.ring, images2, relations=spec.relations, coefficient_action=ca2)

    report = Report("Product decomposition", laws=("mixed", "commute"))
    report.merge(check_action(spec1), prefix="factor1")
    report.merge(check_action(spec2), prefix="factor2")
    for g in spec.generators:
        for i in range(1, e1):
            for j in range(1, e2):
                target = spec.images[g][i * e2 + j]
                first = spec1.apply(images2[g][j])[i]
                second = spec2.apply(images1[g][i])[j]
                if not spec.equal(first, target):
                    report.add_violation("mixed", (i, j), generator=g, order="d1∘d2",
                                         lhs=str(spec.reduce(first)), rhs=str(spec.reduce(target)))
                if not spec.equal(second, target):
                    report.add_violation("mixed", (i, j), generator=g, order="d2∘d1",
                                         lhs=str(spec.reduce(second)), rhs=str(spec.reduce(target)))
                if not spec.equal(first, second):
                    report.add_violation("commute", (i, j), generator=g)
    report.merge(check_action(spec), prefix="full")
    report.details["e"] = [e1, e2]
    return spec1, spec2, report


def compose_product_action(spec1, spec2, hopf=None):
    """Action of ``H1 x H2`` with ``d_(i,j) = d1_i o d2_j``.

    :param hopf: the product Hopf algebra; built with :func:`~pyhopf.hopf.product` when omitted.
    """
    if spec1.ring != spec2.ring or spec1.generators != spec2.generators:
        raise RingMismatch(f"Factor actions live on {spec1.ring} and {spec2.ring}")
    if hopf is None:
        hopf = product(spec1.hopf, spec2.hopf)
    e1, e2 = spec1.e, spec2.e
    images = {}
    for g in spec1.generators:
        values = []
        for i in range(e1):
            for j in range(e2):
                values.append(spec1.apply(spec2.images[g][j])[i])
        images[g] = values
    coefficient_action = None
    if spec1.coefficient_action is not None and spec2.coefficient_action is not None:
        coefficient_action = compose_product_action(spec1.coefficient_action, spec2.coefficient_action, hopf)
    return OperatorSpec(hopf, spec1.ring, images, relations=spec1.relations, coefficient_action=coefficient_action)
