"""Exact arithmetic in towers of computable fields.

A tower starts at the rationals :class:`RationalField` or at a prime field :class:`PrimeField` and is extended by
:class:`SimpleExtension` objects, each adjoining a root of a monic polynomial over the field below. Elements are
:class:`FieldElem` objects holding a canonical raw representation:

* rationals: a :class:`fractions.Fraction` (lowest terms, positive denominator);
* prime fields: an ``int`` in ``[0, p)``;
* simple extensions: a tuple of ``deg(minpoly)`` raw base values, the residue polynomial coefficients from low to high.

Because the representation is canonical, two elements are equal if and only if their raw values are identical.
Elements of a subfield are coerced automatically when they meet elements of a larger field of the same tower.

Irreducibility of minimal polynomials is not checked. A reducible minimal polynomial shows up only when a nonzero
zero divisor is inverted, which raises :class:`~pyhopf.errors.InversionFailure`.
"""

import itertools
import numbers
from fractions import Fraction

import sympy

from ..errors import InversionFailure, IncompatibleFields, NoSolution


class Field:
    characteristic = 0
    degree = 1
    """Degree over the field directly below (1 for prime fields)."""

    # raw arithmetic, implemented by subclasses
    # =========================================
    def _zero(self):
        raise NotImplementedError

    def _one(self):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _is_zero(self, a):
        raise NotImplementedError

    def _from_fraction(self, q):
        raise NotImplementedError

    def _str(self, a):
        raise NotImplementedError

    def _random(self, rng):
        raise NotImplementedError

    def _sub(self, a, b):
        return self._add(a, self._neg(b))

    # identity
    # ========
    @property
    def key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    # element construction
    # ====================
    def zero(self):
        return FieldElem(self, self._zero())

    def one(self):
        return FieldElem(self, self._one())

    def __call__(self, value):
        return self.convert(value)

    def convert(self, value):
        """Turn an ``int``, :class:`~fractions.Fraction`, string or element of a subfield into an element of this field."""
        if isinstance(value, FieldElem):
            return self.coerce(value)
        if isinstance(value, bool):
            raise TypeError(f"Cannot convert a bool to an element of {self}")
        if isinstance(value, numbers.Integral):
            return FieldElem(self, self._from_fraction(Fraction(int(value))))
        if isinstance(value, numbers.Rational):
            return FieldElem(self, self._from_fraction(Fraction(value.numerator, value.denominator)))
        if isinstance(value, str):
            from ..parse import parse_field_element
            return parse_field_element(value, self)
        raise TypeError(f"Cannot convert {value!r} to an element of {self}")

    # tower structure
    # ===============
    @property
    def tower(self):
        """Tuple of fields from the prime field up to this one."""
        return (self,)

    @property
    def prime_field(self):
        return self.tower[0]

    @property
    def names(self):
        """Names of the generators adjoined along the tower, bottom to top."""
        return tuple(f.name for f in self.tower[1:])

    @property
    def absolute_degree(self):
        d = 1
        for f in self.tower:
            d *= f.degree
        return d

    def embeds(self, sub):
        """True if ``sub`` is this field or one of the fields below it in the tower."""
        return any(f == sub for f in self.tower)

    def coerce(self, x):
        if x.field == self:
            return x
        raise IncompatibleFields(f"Element {x} of {x.field} does not lie in a subfield of {self}")

    def degree_over(self, sub):
        self._require_subfield(sub)
        d = 1
        for f in self.tower[::-1]:
            if f == sub:
                return d
            d *= f.degree
        return d

    def _require_subfield(self, sub):
        if not self.embeds(sub):
            raise IncompatibleFields(f"{sub} is not a subfield of {self}")

    def generators_over(self, sub):
        """List of ``(name, generator)`` pairs for the extensions strictly above ``sub``, bottom to top."""
        self._require_subfield(sub)
        tower = self.tower
        start = [f == sub for f in tower].index(True)
        return [(f.name, self.coerce(f.gen)) for f in tower[start + 1:]]

    def basis_over(self, sub):
        """Power basis of this field as a vector space over ``sub``, ordered to match :meth:`coordinates`."""
        self._require_subfield(sub)
        return [self.one()]

    def coordinates(self, x, sub):
        self._require_subfield(sub)
        return [sub.coerce(self.coerce(x))]

    def from_coordinates(self, vec, sub):
        basis = self.basis_over(sub)
        if len(vec) != len(basis):
            raise ValueError(f"Expected {len(basis)} coordinates over {sub}, got {len(vec)}")
        total = self.zero()
        for c, b in zip(vec, basis):
            total = total + self.coerce(sub.convert(c)) * b
        return total

    # sampling and enumeration
    # ========================
    def random_element(self, rng):
        return FieldElem(self, self._random(rng))

    @property
    def is_finite(self):
        return self.characteristic > 0

    def elements(self):
        raise ValueError(f"{self} is infinite")

    def frobenius(self, x):
        if self.characteristic == 0:
            raise ValueError(f"{self} has characteristic 0, there is no Frobenius endomorphism")
        return self.convert(x) ** self.characteristic


class RationalField(Field):
    characteristic = 0

    def _zero(self):
        return Fraction(0)

    def _one(self):
        return Fraction(1)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _from_fraction(self, q):
        return Fraction(q)

    def _str(self, a):
        return str(a)

    def _random(self, rng):
        return Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))

    @property
    def key(self):
        return ("Q",)

    def __str__(self):
        return "Q"

    def __repr__(self):
        return "RationalField()"


class PrimeField(Field):
    def __init__(self, p):
        p = int(p)
        if not sympy.isprime(p):
            raise ValueError(f"Prime field modulus must be prime, got {p}")
        self.p = p
        self.characteristic = p

    def _zero(self):
        return 0

    def _one(self):
        return 1

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def _is_zero(self, a):
        return a == 0

    def _from_fraction(self, q):
        den = q.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"{q} has no image in F_{self.p}")
        return (q.numerator * pow(den, self.p - 2, self.p)) % self.p

    def _str(self, a):
        return str(a)

    def _random(self, rng):
        return int(rng.integers(self.p))

    def elements(self):
        return [FieldElem(self, a) for a in range(self.p)]

    @property
    def key(self):
        return ("F", self.p)

    def __str__(self):
        return f"F_{self.p}"

    def __repr__(self):
        return f"PrimeField({self.p})"


class SimpleExtension(Field):
    """The field ``base[name]/(minpoly)``.

    :param base: the field below.
    :param name: symbol of the adjoined root; must be distinct from the names further down the tower.
    :param minpoly: monic polynomial over ``base`` of degree at least 2, either as a list of coefficients from low to
        high degree (anything :meth:`Field.convert` accepts) or as a string in ``name`` such as ``"a^2 + a + 1"``.
    """

    def __init__(self, base, name, minpoly):
        if not isinstance(base, Field):
            raise TypeError(f"Base of an extension must be a Field, got {base!r}")
        if not name.isidentifier():
            raise ValueError(f"Generator name must be an identifier, got {name!r}")
        if name in base.names:
            raise ValueError(f"Generator name {name} is already used in the tower {base}")
        self.base = base
        self.name = name
        self.characteristic = base.characteristic

        if isinstance(minpoly, str):
            from ..parse import parse_univariate
            minpoly = parse_univariate(minpoly, name, base)
        coeffs = [base.convert(c).raw for c in minpoly]
        while coeffs and base._is_zero(coeffs[-1]):
            coeffs.pop()
        if len(coeffs) < 3:
            raise ValueError(f"Minimal polynomial of {name} must have degree at least 2")
        if coeffs[-1] != base._one():
            raise ValueError(f"Minimal polynomial of {name} must be monic")
        self.minpoly = tuple(coeffs)
        self.degree = len(coeffs) - 1

    # raw arithmetic
    # ==============
    def _zero(self):
        return (self.base._zero(),) * self.degree

    def _one(self):
        return (self.base._one(),) + (self.base._zero(),) * (self.degree - 1)

    def _add(self, a, b):
        return tuple(self.base._add(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(self.base._neg(x) for x in a)

    def _mul(self, a, b):
        base = self.base
        d = self.degree
        r = [base._zero()] * (2 * d - 1)
        for i, x in enumerate(a):
            if base._is_zero(x):
                continue
            for j, y in enumerate(b):
                if base._is_zero(y):
                    continue
                r[i + j] = base._add(r[i + j], base._mul(x, y))
        # reduce by the monic minimal polynomial, highest degree first
        for k in range(2 * d - 2, d - 1, -1):
            t = r[k]
            if base._is_zero(t):
                continue
            for i in range(d):
                r[k - d + i] = base._sub(r[k - d + i], base._mul(t, self.minpoly[i]))
            r[k] = base._zero()
        return tuple(r[:d])

    def _inv(self, a):
        if self._is_zero(a):
            raise ZeroDivisionError(f"division by zero in {self}")
        from . import linalg
        base = self.base
        # column k holds the coordinates of a * gen^k
        columns = []
        power = self._one()
        gen = self.gen.raw
        for k in range(self.degree):
            columns.append(self._mul(a, power))
            power = self._mul(power, gen)
        matrix = [[FieldElem(base, columns[k][r]) for k in range(self.degree)] for r in range(self.degree)]
        rhs = [FieldElem(base, c) for c in self._one()]
        try:
            sol = linalg.solve(matrix, rhs, field=base)
        except NoSolution:
            raise InversionFailure(f"{self._str(a)} is a zero divisor in {self}; "
                                   f"the minimal polynomial of {self.name} is not irreducible") from None
        return tuple(s.raw for s in sol)

    def _is_zero(self, a):
        return all(self.base._is_zero(x) for x in a)

    def _from_fraction(self, q):
        return (self.base._from_fraction(q),) + (self.base._zero(),) * (self.degree - 1)

    def _random(self, rng):
        return tuple(self.base._random(rng) for _ in range(self.degree))

    def _str(self, a):
        base = self.base
        terms = []
        for k in range(self.degree - 1, -1, -1):
            c = a[k]
            if base._is_zero(c):
                continue
            c_str = base._str(c)
            if k == 0:
                terms.append(c_str)
                continue
            mon = self.name if k == 1 else f"{self.name}^{k}"
            if c == base._one():
                terms.append(mon)
            elif c == base._neg(base._one()) and base.characteristic != 2:
                terms.append("-" + mon)
            elif _is_atomic(c_str):
                terms.append(f"{c_str}*{mon}")
            else:
                terms.append(f"({c_str})*{mon}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    # tower structure
    # ===============
    @property
    def gen(self):
        raw = [self.base._zero()] * self.degree
        raw[1] = self.base._one()
        return FieldElem(self, tuple(raw))

    @property
    def tower(self):
        return self.base.tower + (self,)

    def coerce(self, x):
        if x.field == self:
            return x
        if not self.base.embeds(x.field):
            raise IncompatibleFields(f"Element {x} of {x.field} does not lie in a subfield of {self}")
        inner = self.base.coerce(x)
        return FieldElem(self, (inner.raw,) + (self.base._zero(),) * (self.degree - 1))

    def basis_over(self, sub):
        self._require_subfield(sub)
        if sub == self:
            return [self.one()]
        lower = [self.coerce(b) for b in self.base.basis_over(sub)]
        basis = []
        power = self.one()
        for _ in range(self.degree):
            basis.extend(power * b for b in lower)
            power = power * self.gen
        return basis

    def coordinates(self, x, sub):
        self._require_subfield(sub)
        x = self.coerce(x)
        if sub == self:
            return [x]
        coords = []
        for c in x.raw:
            coords.extend(self.base.coordinates(FieldElem(self.base, c), sub))
        return coords

    def elements(self):
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        base_raw = [b.raw for b in self.base.elements()]
        return [FieldElem(self, tuple(t)) for t in itertools.product(base_raw, repeat=self.degree)]

    @property
    def key(self):
        return ("E", self.base.key, self.name, self.minpoly)

    def __str__(self):
        return f"{self.base}({self.name})"

    def __repr__(self):
        return f"SimpleExtension({self.base!r}, {self.name!r}, {self.minpoly!r})"


def _is_atomic(s):
    return not any(ch in s[1:] for ch in "+-")


def extension(base, name, minpoly):
    return SimpleExtension(base, name, minpoly)


QQ = RationalField()


def GF(p):
    return PrimeField(p)


class FieldElem:
    """An element of a :class:`Field`. Immutable; arithmetic returns new elements."""

    __slots__ = ("field", "raw")

    def __init__(self, field, raw):
        self.field = field
        self.raw = raw

    def _lift(self, other):
        """Bring ``self`` and ``other`` into a common field. Returns ``None`` for foreign types."""
        if isinstance(other, FieldElem):
            if other.field is self.field or other.field == self.field:
                return self.field, self.raw, other.raw
            if self.field.embeds(other.field):
                return self.field, self.raw, self.field.coerce(other).raw
            if other.field.embeds(self.field):
                return other.field, other.field.coerce(self).raw, other.raw
            raise IncompatibleFields(f"{self.field} and {other.field} are not in a common tower")
        if isinstance(other, numbers.Rational) and not isinstance(other, bool):
            return self.field, self.raw, self.field._from_fraction(Fraction(other.numerator, other.denominator))
        return None

    def __add__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        field, a, b = lifted
        return FieldElem(field, field._add(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        field, a, b = lifted
        return FieldElem(field, field._sub(a, b))

    def __rsub__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        field, a, b = lifted
        return FieldElem(field, field._sub(b, a))

    def __mul__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        field, a, b = lifted
        return FieldElem(field, field._mul(a, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        field, a, b = lifted
        return FieldElem(field, field._mul(a, field._inv(b)))

    def __rtruediv__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        field, a, b = lifted
        return FieldElem(field, field._mul(b, field._inv(a)))

    def __neg__(self):
        return FieldElem(self.field, self.field._neg(self.raw))

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral):
            return NotImplemented
        n = int(n)
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = self.field.one()
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        return FieldElem(self.field, self.field._inv(self.raw))

    def is_zero(self):
        return self.field._is_zero(self.raw)

    def is_one(self):
        return self.raw == self.field._one()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            lifted = self._lift(other)
        except (IncompatibleFields, ZeroDivisionError):
            # a rational whose denominator vanishes mod p has no image in the field
            return False
        if lifted is None:
            return NotImplemented
        _, a, b = lifted
        return a == b

    def __hash__(self):
        # descend to the smallest field containing the element so that embedded copies hash alike
        field, raw = self.field, self.raw
        while isinstance(field, SimpleExtension) and all(field.base._is_zero(c) for c in raw[1:]):
            field, raw = field.base, raw[0]
        return hash((field.key, raw))

    def __str__(self):
        return self.field._str(self.raw)

    def __repr__(self):
        return f"FieldElem({self}, {self.field})"
