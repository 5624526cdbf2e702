"""Finite-dimensional Hopf algebras given by structure constants.

For a basis ``b_0, ..., b_{e-1}`` of ``H`` over ``field`` the tensors are indexed as follows:

* ``mult[i, j, l]``: ``b_i * b_j = sum_l mult[i, j, l] b_l``;
* ``comult[i, j, l]``: ``mu(b_l) = sum_{i,j} comult[i, j, l] b_i (x) b_j``;
* ``counit[i] = pi(b_i)``;
* ``unit[i]``: ``1_H = sum_i unit[i] b_i``;
* ``antipode[i, a]``: ``S(b_i) = sum_a antipode[i, a] b_a``.

All tensors are read-only numpy object arrays of :class:`~pyhopf.fields.FieldElem`.
A basis change ``change_basis(H, M)`` uses the rows of ``M`` as the new basis vectors in old coordinates,
``b'_k = sum_a M[k, a] b_a``.
"""

import logging

import numpy as np

from ..errors import (DimensionMismatch, IncompatibleFields, NoAntipode, NoSolution, NotGoodBasis)
from ..fields import linalg
from ..report import Report
from ..util import format_sum, jsonable

logger = logging.getLogger(__name__)


def _tensor(data, field, shape, name):
    src = np.asarray(data, dtype=object)
    if src.shape != shape:
        raise DimensionMismatch(f"{name} has shape {src.shape}, expected {shape}")
    arr = np.empty(shape, dtype=object)
    for idx in np.ndindex(*shape):
        arr[idx] = field.convert(src[idx])
    arr.flags.writeable = False
    return arr


class HopfData:
    """Structure constants of a Hopf algebra (or candidate bialgebra) of dimension ``e``.

    The constructor only validates shapes; the algebraic laws are checked by :func:`verify_bialgebra`.

    :param field: the base field.
    :param mult: ``e x e x e`` multiplication constants.
    :param comult: ``e x e x e`` comultiplication constants.
    :param counit: length ``e`` vector.
    :param unit: length ``e`` coordinates of ``1_H``.
    :param antipode: optional ``e x e`` matrix.
    :param basis_names: names of the basis vectors, ``b0, b1, ...`` by default.
    :param metadata: free-form dict (builtin name, warnings, product factors, ...).
    """

    def __init__(self, field, mult, comult, counit, unit, antipode=None, basis_names=None, metadata=None):
        e = len(counit)
        if e < 1:
            raise DimensionMismatch("A Hopf algebra has dimension at least 1")
        self.field = field
        self.counit = _tensor(counit, field, (e,), "counit")
        self.unit = _tensor(unit, field, (e,), "unit")
        self.mult = _tensor(mult, field, (e, e, e), "mult")
        self.comult = _tensor(comult, field, (e, e, e), "comult")
        self.antipode = None if antipode is None else _tensor(antipode, field, (e, e), "antipode")
        if basis_names is None:
            basis_names = [f"b{i}" for i in range(e)]
        basis_names = tuple(basis_names)
        if len(basis_names) != e or len(set(basis_names)) != e:
            raise DimensionMismatch(f"Expected {e} distinct basis names, got {basis_names}")
        self.basis_names = basis_names
        self.metadata = {} if metadata is None else dict(metadata)
        self._supports = {}

    @property
    def e(self):
        return len(self.counit)

    def support(self, tensor):
        """Nonzero entries of ``mult`` or ``comult`` as a list of ``(i, j, l, value)``."""
        if tensor not in self._supports:
            arr = getattr(self, tensor)
            self._supports[tensor] = [(i, j, l, arr[i, j, l]) for i, j, l in np.ndindex(*arr.shape)
                                      if not arr[i, j, l].is_zero()]
        return self._supports[tensor]

    def is_good_basis(self):
        return self.counit[0].is_one() and all(p.is_zero() for p in self.counit[1:])

    def is_commutative(self):
        return all(self.mult[i, j, l] == self.mult[j, i, l] for i, j, l in np.ndindex(*self.mult.shape))

    def is_cocommutative(self):
        return all(self.comult[i, j, l] == self.comult[j, i, l] for i, j, l in np.ndindex(*self.comult.shape))

    def replace(self, **changes):
        """Return a copy with some of the constructor arguments replaced."""
        kw = dict(field=self.field, mult=self.mult, comult=self.comult, counit=self.counit, unit=self.unit,
                  antipode=self.antipode, basis_names=self.basis_names, metadata=self.metadata)
        kw.update(changes)
        return HopfData(**kw)

    def with_antipode(self, antipode=None):
        """Return a copy with the antipode attached, solving for it if not given."""
        if antipode is None:
            antipode = solve_antipode(self)
        return self.replace(antipode=antipode)

    # arithmetic on coordinate vectors
    # ================================
    def multiply(self, x, y):
        return np.tensordot(np.tensordot(np.asarray(x, dtype=object), self.mult, axes=([0], [0])),
                            np.asarray(y, dtype=object), axes=([0], [0]))

    def comultiply(self, x):
        return np.tensordot(self.comult, np.asarray(x, dtype=object), axes=([2], [0]))

    # output
    # ======
    def table_lines(self):
        names = self.basis_names
        e = self.e
        lines = []
        for i in range(e):
            for j in range(e):
                lines.append(f"{names[i]}*{names[j]} = "
                             + format_sum((self.mult[i, j, l], names[l]) for l in range(e)))
        for l in range(e):
            lines.append(f"mu({names[l]}) = " + format_sum(
                (self.comult[i, j, l], f"{names[i]}⊗{names[j]}") for i in range(e) for j in range(e)))
        for i in range(e):
            lines.append(f"pi({names[i]}) = {self.counit[i]}")
        lines.append("1 = " + format_sum((self.unit[i], names[i]) for i in range(e)))
        if self.antipode is not None:
            for i in range(e):
                lines.append(f"S({names[i]}) = " + format_sum((self.antipode[i, a], names[a]) for a in range(e)))
        return lines

    def summary(self, do_print=True, do_return=False):
        title = f"Hopf algebra of dimension {self.e} over {self.field}"
        msg = f"{title}\n{'=' * len(title)}\n"
        if "builtin" in self.metadata:
            msg += f"builtin: {self.metadata['builtin']}\n"
        msg += "\n".join(self.table_lines()) + "\n"
        for w in self.metadata.get("warnings", []):
            msg += f"warning: {w}\n"

        if do_print:
            print(msg)

        if do_return:
            return msg

    def to_dict(self):
        d = {
            "field": str(self.field),
            "e": self.e,
            "basis_names": list(self.basis_names),
            "mult": self.mult,
            "comult": self.comult,
            "counit": self.counit,
            "unit": self.unit,
        }
        if self.antipode is not None:
            d["antipode"] = self.antipode
        meta = {k: v for k, v in self.metadata.items() if k != "factors"}
        if meta:
            d["metadata"] = meta
        return jsonable(d)

    def __repr__(self):
        return f"HopfData(e={self.e}, field={self.field}, good_basis={self.is_good_basis()})"


def build_hopf(field, mult, comult, counit, unit, antipode=None, basis_names=None, metadata=None):
    """Validate shapes and wrap raw structure constants; see :class:`HopfData`."""
    return HopfData(field, mult, comult, counit, unit, antipode=antipode, basis_names=basis_names,
                    metadata=metadata)


def tensors_equal(h1, h2, include_antipode=False):
    if h1.field != h2.field or h1.e != h2.e:
        return False
    pairs = [(h1.mult, h2.mult), (h1.comult, h2.comult), (h1.counit, h2.counit), (h1.unit, h2.unit)]
    if include_antipode:
        if (h1.antipode is None) != (h2.antipode is None):
            return False
        if h1.antipode is not None:
            pairs.append((h1.antipode, h2.antipode))
    return all(bool(np.all(a == b)) for a, b in pairs)


# verification
# ============
BIALGEBRA_LAWS = ("assoc", "coassoc", "counit_law", "unit_law", "compatibility")


def _compare(report, law, lhs, rhs, **info):
    for idx in np.ndindex(*np.shape(lhs)):
        if lhs[idx] != rhs[idx]:
            report.add_violation(law, idx, **info)


def _compare_sparse(report, law, lhs, rhs, zero, **info):
    for idx in sorted(set(lhs) | set(rhs)):
        if lhs.get(idx, zero) != rhs.get(idx, zero):
            report.add_violation(law, idx, **info)


def _delta(n, field):
    return linalg.identity(n, field)


def _grouped(entries, key):
    """Index the support ``(i, j, l, v)`` of a tensor by the slots selected with ``key``."""
    groups = {}
    for i, j, l, v in entries:
        k, rest = key(i, j, l)
        groups.setdefault(k, []).append(rest + (v,))
    return groups


def _accumulate(acc, idx, value):
    acc[idx] = acc[idx] + value if idx in acc else value


def _check_assoc(h, report):
    # (b_i b_j) b_k = b_i (b_j b_k)
    m = h.support("mult")
    by_first = _grouped(m, lambda i, j, l: (i, (j, l)))
    by_second = _grouped(m, lambda i, j, l: (j, (i, l)))
    lhs, rhs = {}, {}
    for i, j, l, v in m:
        for k, r, w in by_first.get(l, ()):
            _accumulate(lhs, (i, j, k, r), v * w)
    for j, k, l, v in m:
        for i, r, w in by_second.get(l, ()):
            _accumulate(rhs, (i, j, k, r), v * w)
    _compare_sparse(report, "assoc", lhs, rhs, h.field.zero())


def _check_coassoc(h, report):
    # (mu x id) mu = (id x mu) mu
    c = h.support("comult")
    by_third = _grouped(c, lambda i, j, l: (l, (i, j)))
    lhs, rhs = {}, {}
    for x, b, l, v in c:
        for a, y, w in by_third.get(x, ()):
            _accumulate(lhs, (a, y, b, l), w * v)
    for a, x, l, v in c:
        for y, b, w in by_third.get(x, ()):
            _accumulate(rhs, (a, y, b, l), v * w)
    _compare_sparse(report, "coassoc", lhs, rhs, h.field.zero())


def _check_counit(h, report):
    # (pi x id) mu = id = (id x pi) mu
    one = _delta(h.e, h.field)
    _compare(report, "counit_law", np.tensordot(h.counit, h.comult, axes=([0], [0])), one, side="left")
    _compare(report, "counit_law", np.tensordot(h.comult, h.counit, axes=([1], [0])), one, side="right")


def _check_unit(h, report):
    # 1 * b_j = b_j = b_j * 1
    one = _delta(h.e, h.field)
    _compare(report, "unit_law", np.tensordot(h.unit, h.mult, axes=([0], [0])), one, side="left")
    _compare(report, "unit_law", np.tensordot(h.mult, h.unit, axes=([1], [0])), one, side="right")


def _check_compatibility(h, report):
    # mu(b_i b_j) = mu(b_i) mu(b_j), indexed (i, j, a, b) for the b_a (x) b_b coordinate
    m, c = h.support("mult"), h.support("comult")
    c_by_third = _grouped(c, lambda a, b, l: (l, (a, b)))
    m_by_pair = _grouped(m, lambda i, j, l: ((i, j), (l,)))
    lhs, rhs = {}, {}
    for i, j, l, v in m:
        for a, b, w in c_by_third.get(l, ()):
            _accumulate(lhs, (i, j, a, b), v * w)
    for p, q, i, v in c:
        for r, s, j, w in c:
            vw = v * w
            for a, x in m_by_pair.get((p, r), ()):
                for b, y in m_by_pair.get((q, s), ()):
                    _accumulate(rhs, (i, j, a, b), vw * x * y)
    _compare_sparse(report, "compatibility", lhs, rhs, h.field.zero(), identity="mu(b_i*b_j)")
    # pi is multiplicative and unital, mu is unital
    pi, u = h.counit, h.unit
    _compare(report, "compatibility", np.tensordot(h.mult, pi, axes=([2], [0])), np.multiply.outer(pi, pi),
             identity="pi(b_i*b_j)")
    _compare(report, "compatibility", np.tensordot(h.comult, u, axes=([2], [0])), np.multiply.outer(u, u),
             identity="mu(1)")
    if np.dot(u, pi) != 1:
        report.add_violation("compatibility", (), identity="pi(1)")


# cheapest first
_LAW_CHECKS = (_check_unit, _check_counit, _check_assoc, _check_coassoc, _check_compatibility)


def verify_bialgebra(h, stop_at_first=False):
    """Check every bialgebra law as an identity in the structure constants.

    The report lists each violated ``(law, indices)``; ``good_basis`` and ``commutative`` are informational details.
    When an antipode is attached, the antipode identities are checked too.

    :param stop_at_first: return as soon as one law has a violation. The report then covers only the laws
        checked so far.
    """
    e = h.e
    report = Report(f"Bialgebra check, e={e} over {h.field}", laws=BIALGEBRA_LAWS)
    report.details["e"] = e
    for check in _LAW_CHECKS:
        check(h, report)
        if stop_at_first and not report.passed:
            return report

    if h.antipode is not None:
        report.merge(verify_antipode(h, h.antipode))

    report.details["good_basis"] = h.is_good_basis()
    report.details["commutative"] = h.is_commutative()
    report.details["cocommutative"] = h.is_cocommutative()
    for w in h.metadata.get("warnings", []):
        if w not in report.notes:
            report.notes.append(w)
    return report


def _antipode_system(h):
    """Coefficient blocks of the two convolution identities ``S * id = u pi = id * S``.

    Row ``(l, t)`` is the ``b_t`` coordinate of the identity applied to ``b_l``; column ``(i, a)`` is ``S[i, a]``.
    """
    m, c = h.mult, h.comult
    e = h.e
    left = np.tensordot(c, m, axes=([1], [1])).transpose(1, 3, 0, 2).reshape(e * e, e * e)
    right = np.tensordot(c, m, axes=([0], [0])).transpose(1, 3, 0, 2).reshape(e * e, e * e)
    rhs = np.multiply.outer(h.counit, h.unit).reshape(e * e)
    return left, right, rhs


def verify_antipode(h, antipode):
    s = _tensor(antipode, h.field, (h.e, h.e), "antipode").reshape(h.e * h.e)
    left, right, rhs = _antipode_system(h)
    report = Report("Antipode check", laws=("antipode",))
    e = h.e
    for side, block in (("left", left), ("right", right)):
        values = np.dot(block, s)
        for row in range(e * e):
            if values[row] != rhs[row]:
                report.add_violation("antipode", divmod(row, e), side=side)
    return report


def solve_antipode(h):
    """Solve the convolution identities for the antipode matrix.

    :raises NoAntipode: if the linear system has no solution, i.e. the bialgebra is not a Hopf algebra.
    """
    left, right, rhs = _antipode_system(h)
    matrix = np.concatenate([left, right], axis=0)
    try:
        sol = linalg.solve(matrix, list(rhs) + list(rhs), field=h.field)
    except NoSolution:
        raise NoAntipode(f"The bialgebra of dimension {h.e} over {h.field} has no antipode") from None
    s = np.empty((h.e, h.e), dtype=object)
    for k, x in enumerate(sol):
        s[divmod(k, h.e)] = x
    return s


# basis manipulations
# ===================
def change_basis(h, matrix):
    """Express ``h`` in the basis ``b'_k = sum_a matrix[k, a] b_a``.

    :raises SingularMatrix: if ``matrix`` is not invertible over ``h.field``.
    """
    e = h.e
    M = linalg.as_matrix(matrix, field=h.field)
    if M.shape != (e, e):
        raise DimensionMismatch(f"Basis change matrix has shape {M.shape}, expected {(e, e)}")
    P = linalg.inverse(M, field=h.field)

    mult = np.tensordot(np.tensordot(M, h.mult, axes=([1], [0])), M, axes=([1], [1])).transpose(0, 2, 1)
    mult = np.tensordot(mult, P, axes=([2], [0]))
    comult = np.tensordot(np.tensordot(P, h.comult, axes=([0], [0])), P, axes=([1], [0])).transpose(0, 2, 1)
    comult = np.tensordot(comult, M, axes=([2], [1]))
    counit = np.dot(M, h.counit)
    unit = np.dot(h.unit, P)
    antipode = None if h.antipode is None else np.dot(np.dot(M, h.antipode), P)

    metadata = dict(h.metadata)
    if not np.all(M == linalg.identity(e, h.field)):
        # product factor bookkeeping refers to the old basis
        metadata.pop("factors", None)
        metadata.pop("product", None)
    return h.replace(mult=mult, comult=comult, counit=counit, unit=unit, antipode=antipode, metadata=metadata)


def good_basis(h, candidate=None):
    """Change to a basis with ``pi = (1, 0, ..., 0)``.

    Without ``candidate`` the first basis vector with nonzero counit becomes ``b'_0 = b_k / pi(b_k)`` and every
    other vector, in order, is replaced by ``b_a - pi(b_a)/pi(b_k) b_k``.

    :param candidate: a basis change matrix to verify and use instead.
    :returns: ``(H', M)`` with ``H' = change_basis(h, M)``.
    :raises NotGoodBasis: if ``candidate`` does not produce a good basis.
    """
    e = h.e
    field = h.field
    if candidate is not None:
        M = linalg.as_matrix(candidate, field=field)
        new = change_basis(h, M)
        if not new.is_good_basis():
            counit = ", ".join(str(p) for p in new.counit)
            raise NotGoodBasis(f"Candidate basis has counit ({counit}), expected (1, 0, ..., 0)")
        return new, M

    if h.is_good_basis():
        return h, linalg.identity(e, field)
    k = next(i for i in range(e) if not h.counit[i].is_zero())
    pk = h.counit[k]
    rows = []
    first = [field.zero()] * e
    first[k] = pk.inverse()
    rows.append(first)
    for a in range(e):
        if a == k:
            continue
        row = [field.zero()] * e
        row[a] = field.one()
        row[k] = row[k] - h.counit[a] / pk
        rows.append(row)
    M = linalg.as_matrix(rows, field=field)
    logger.debug(f"good basis pivot on slot {k}")
    return change_basis(h, M), M


def base_change(h, bigger):
    """Reinterpret the structure constants over a field containing ``h.field``."""
    if bigger == h.field:
        return h
    if not bigger.embeds(h.field):
        raise IncompatibleFields(f"{bigger} does not contain {h.field}")
    metadata = dict(h.metadata)
    metadata["base_field"] = str(h.field)
    return HopfData(bigger, h.mult, h.comult, h.counit, h.unit, antipode=h.antipode, basis_names=h.basis_names,
                    metadata=metadata)


def _kron3(a, b):
    e = a.shape[0] * b.shape[0]
    return np.multiply.outer(a, b).transpose(0, 3, 1, 4, 2, 5).reshape(e, e, e)


def product(h1, h2):
    """Tensor product Hopf algebra, basis ``b_i (x) b'_j`` at index ``i * e2 + j``."""
    if h1.field != h2.field:
        raise IncompatibleFields(f"Cannot take the product of Hopf algebras over {h1.field} and {h2.field}")
    e1, e2 = h1.e, h2.e
    antipode = None
    if h1.antipode is not None and h2.antipode is not None:
        antipode = np.multiply.outer(h1.antipode, h2.antipode).transpose(0, 2, 1, 3).reshape(e1 * e2, e1 * e2)
    names = [f"({a},{b})" for a in h1.basis_names for b in h2.basis_names]
    warnings = h1.metadata.get("warnings", []) + h2.metadata.get("warnings", [])
    metadata = {
        "product": {"e": [e1, e2], "factors": [h1.metadata.get("builtin", "H1"), h2.metadata.get("builtin", "H2")]},
        "factors": (h1, h2),
    }
    if warnings:
        metadata["warnings"] = warnings
    return HopfData(
        h1.field,
        _kron3(h1.mult, h2.mult),
        _kron3(h1.comult, h2.comult),
        np.multiply.outer(h1.counit, h2.counit).reshape(e1 * e2),
        np.multiply.outer(h1.unit, h2.unit).reshape(e1 * e2),
        antipode=antipode,
        basis_names=names,
        metadata=metadata,
    )


def product_factors(h):
    """The ``(H1, H2)`` pair recorded by :func:`product`, or ``None``."""
    return h.metadata.get("factors")


TENSORS = ("mult", "comult", "counit", "unit")


def mutate(h, tensor, index, delta=1):
    """Copy of ``h`` with a single structure constant shifted by ``delta``; the antipode is dropped."""
    if tensor not in TENSORS:
        raise ValueError(f"Unknown structure tensor {tensor!r}, expected one of {TENSORS}")
    arr = getattr(h, tensor).copy()
    index = tuple(index)
    arr[index] = arr[index] + h.field.convert(delta)
    metadata = dict(h.metadata)
    metadata["mutation"] = {"tensor": tensor, "index": list(index), "delta": str(delta)}
    return h.replace(**{tensor: arr}, antipode=None, metadata=metadata)
