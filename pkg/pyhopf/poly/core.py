"""Sparse multivariate polynomials over a :class:`~pyhopf.fields.Field`."""

import enum
import itertools
import numbers

from .. import config
from ..errors import RingMismatch, IncompatibleFields
from ..fields.core import Field, FieldElem
from ..util import format_sum


class MonomialOrder(enum.Enum):
    GREVLEX = "grevlex"
    LEX = "lex"

    @classmethod
    def from_name(cls, name):
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise ValueError(f"Unknown monomial order {name!r}, use 'grevlex' or 'lex'") from None

    def key(self, exps):
        """Sort key of an exponent tuple; larger keys are larger monomials."""
        if self is MonomialOrder.LEX:
            return exps
        return sum(exps), tuple(-e for e in reversed(exps))


def _monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _monomial_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


def _monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class PolyRing:
    """The polynomial ring ``field[variables]``.

    :param field: coefficient field.
    :param variables: variable names, in declaration order (the first variable is the largest in ``lex``).
    :param order: default monomial order for leading terms and printing; ``config.get("groebner.order")`` if omitted.

    Two rings are equal when they have the same field and variables; the order is a presentation choice.
    """

    def __init__(self, field, variables, order=None):
        if not isinstance(field, Field):
            raise TypeError(f"Coefficient field must be a Field, got {field!r}")
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"Duplicate variable names in {variables}")
        for v in variables:
            if not v.isidentifier():
                raise ValueError(f"Variable name must be an identifier, got {v!r}")
            if v in field.names:
                raise ValueError(f"Variable {v} clashes with a generator of {field}")
        if order is None:
            order = config.get("groebner.order")
        self.field = field
        self.variables = variables
        self.order = MonomialOrder.from_name(order)
        self._index = {v: i for i, v in enumerate(variables)}

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def key(self):
        return self.field.key, self.variables

    def __eq__(self, other):
        return isinstance(other, PolyRing) and (other is self or self.key == other.key)

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return f"{self.field}[{','.join(self.variables)}]"

    def __repr__(self):
        return f"PolyRing({self.field!r}, {self.variables!r}, order={self.order.value!r})"

    def with_order(self, order):
        return PolyRing(self.field, self.variables, order=order)

    def base_change(self, field):
        if not field.embeds(self.field):
            raise IncompatibleFields(f"{field} does not extend {self.field}")
        return PolyRing(field, self.variables, order=self.order)

    def index(self, var):
        try:
            return self._index[var]
        except KeyError:
            raise RingMismatch(f"{var} is not a variable of {self}") from None

    # element construction
    # ====================
    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.constant(self.field.one())

    def constant(self, c):
        return Poly(self, {(0,) * self.nvars: self.field.convert(c)})

    def monomial(self, exps, coeff=1):
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars:
            raise RingMismatch(f"Exponent tuple {exps} does not match the {self.nvars} variables of {self}")
        return Poly(self, {exps: self.field.convert(coeff)})

    def gen(self, var):
        i = var if isinstance(var, numbers.Integral) else self.index(var)
        exps = [0] * self.nvars
        exps[i] = 1
        return Poly(self, {tuple(exps): self.field.one()})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def __call__(self, value):
        return self.convert(value)

    def convert(self, value):
        if isinstance(value, Poly):
            if value.ring == self:
                return value
            if value.ring.variables == self.variables and self.field.embeds(value.ring.field):
                return Poly(self, {m: self.field.coerce(c) for m, c in value.terms.items()})
            raise RingMismatch(f"Polynomial {value} of {value.ring} is not an element of {self}")
        if isinstance(value, str):
            from ..parse import parse_poly
            return parse_poly(value, self)
        return self.constant(value)

    def random_element(self, rng, degree=2, density=0.5):
        """Random polynomial of total degree at most ``degree``; each monomial is present with probability ``density``."""
        terms = {}
        for exps in self.monomials_up_to(degree):
            if rng.random() < density:
                terms[exps] = self.field.random_element(rng)
        return Poly(self, terms)

    def monomials_up_to(self, degree):
        """All exponent tuples of total degree at most ``degree``, in increasing lex order."""
        return [exps for exps in itertools.product(range(degree + 1), repeat=self.nvars) if sum(exps) <= degree]


class Poly:
    """An immutable polynomial: a dict from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        field = ring.field
        clean = {}
        for m, c in terms.items():
            if not isinstance(c, FieldElem) or c.field != field:
                c = field.convert(c)
            if not c.is_zero():
                clean[m] = c
        self.ring = ring
        self.terms = clean

    def _wrap(self, other):
        if isinstance(other, Poly):
            if other.ring == self.ring:
                return other
            return self.ring.convert(other)
        if isinstance(other, FieldElem) or (isinstance(other, numbers.Rational) and not isinstance(other, bool)):
            return self.ring.constant(other)
        return None

    # arithmetic
    # ==========
    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _monomial_mul(m1, m2)
                c = c1 * c2
                terms[m] = terms[m] + c if m in terms else c
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant():
                raise ValueError("Polynomials can only be divided by nonzero constants, use groebner.divide")
            other = other.constant_value()
        c = self.ring.field.convert(other)
        inv = c.inverse()
        return Poly(self.ring, {m: a * inv for m, a in self.terms.items()})

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral) or n < 0:
            return NotImplemented
        result = self.ring.one()
        base = self
        n = int(n)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_monomial(self, exps, c):
        """Return ``c * x^exps * self``."""
        c = self.ring.field.convert(c)
        return Poly(self.ring, {_monomial_mul(m, exps): a * c for m, a in self.terms.items()})

    # inspection
    # ==========
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return not self.is_zero()

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero())

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.zero())

    def degree(self):
        if self.is_zero():
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, var):
        i = self.ring.index(var)
        return max((m[i] for m in self.terms), default=-1)

    def variables_used(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return [self.ring.variables[i] for i in sorted(used)]

    def sorted_monomials(self, order=None):
        order = self.ring.order if order is None else MonomialOrder.from_name(order)
        return sorted(self.terms, key=order.key, reverse=True)

    def leading_monomial(self, order=None):
        if self.is_zero():
            raise ValueError("The zero polynomial has no leading monomial")
        order = self.ring.order if order is None else MonomialOrder.from_name(order)
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order=None):
        return self.terms[self.leading_monomial(order)]

    def leading_term(self, order=None):
        m = self.leading_monomial(order)
        return Poly(self.ring, {m: self.terms[m]})

    def monic(self, order=None):
        if self.is_zero():
            return self
        return self / self.leading_coefficient(order)

    # maps
    # ====
    def evaluate(self, values, zero=None):
        """Substitute ``values[i]`` for the i-th variable.

        The values may lie in any ring the coefficients multiply into: a field containing the coefficient field,
        another polynomial ring, or a quotient-ring element type with compatible operators.

        :param zero: value returned for the zero polynomial; the zero of the coefficient field if omitted.
        """
        values = list(values)
        if len(values) != self.ring.nvars:
            raise RingMismatch(f"Expected {self.ring.nvars} values for {self.ring}, got {len(values)}")
        result = None
        powers = {}
        for m in self.sorted_monomials():
            term = self.terms[m]
            for i, e in enumerate(m):
                if e:
                    if (i, e) not in powers:
                        powers[(i, e)] = values[i] ** e
                    term = term * powers[(i, e)]
            result = term if result is None else result + term
        if result is None:
            return self.ring.field.zero() if zero is None else zero
        return result

    def substitute(self, mapping, target_ring=None):
        """Ring homomorphism defined on the variables.

        :param mapping: dict from variable name to its image (a :class:`Poly` of ``target_ring`` or a scalar).
            Variables not in ``mapping`` are sent to the variable of the same name in ``target_ring``.
        :param target_ring: ring of the result; defaults to this polynomial's ring.
        """
        target = self.ring if target_ring is None else target_ring
        for v in mapping:
            self.ring.index(v)
        images = []
        for v in self.ring.variables:
            if v in mapping:
                images.append(target.convert(mapping[v]))
            elif v in target.variables:
                images.append(target.gen(v))
            else:
                raise RingMismatch(f"Variable {v} has no image in {target}")
        return target.convert(self.evaluate(images, zero=target.zero()))

    # comparison and output
    # =====================
    def __eq__(self, other):
        try:
            other = self._wrap(other)
        except (RingMismatch, IncompatibleFields):
            return False
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.variables, frozenset(self.terms.items())))

    def _monomial_str(self, exps):
        parts = []
        for v, e in zip(self.ring.variables, exps):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts)

    def __str__(self):
        return format_sum((self.terms[m], self._monomial_str(m)) for m in self.sorted_monomials())

    def __repr__(self):
        return f"Poly({self}, {self.ring})"
