"""Operator specifications and the twisted tensor ring.

An :class:`OperatorSpec` describes a candidate action ``d: R -> R (x) H`` through the operators ``d_0, ..., d_{e-1}``
(the coordinates of ``d`` in a good basis of ``H``), given on generators:

* for a field tower ``K`` over ``H.field``, one image per tower generator above ``H.field``;
* for a polynomial ring ``K[x_1, ..., x_n]`` (optionally modulo relations), one image per variable, plus the action
  on the coefficient field ``K`` when ``K`` is larger than ``H.field``.

Elements of the bottom field ``H.field`` follow the scalar rule ``d_i(c) = u_i * c`` where ``1_H = sum_i u_i b_i``.
Everything else follows by multiplicativity: ``d`` is a ring homomorphism into the twisted tensor ring, whose
product is ``(r * s)_l = sum_{i,j} m[i, j, l] r_i s_j``.
"""

import numbers

from ..errors import DimensionMismatch, IncompatibleFields, NotGoodBasis, RingMismatch
from ..fields.core import Field, FieldElem
from ..poly.core import PolyRing
from ..poly.groebner import Ideal


class TwistedTensor:
    """Element of ``R (x) H`` in coordinates along the basis of ``H``."""

    __slots__ = ("hopf", "ring", "components")

    def __init__(self, hopf, ring, components):
        components = tuple(components)
        if len(components) != hopf.e:
            raise DimensionMismatch(f"Twisted tensor needs {hopf.e} components, got {len(components)}")
        self.hopf = hopf
        self.ring = ring
        self.components = components

    @classmethod
    def zero(cls, hopf, ring):
        return cls(hopf, ring, [ring.zero()] * hopf.e)

    @classmethod
    def one(cls, hopf, ring):
        return cls(hopf, ring, [ring.convert(u) for u in hopf.unit])

    def _same(self, other):
        if not isinstance(other, TwistedTensor):
            return False
        if other.hopf is not self.hopf and other.hopf.e != self.hopf.e:
            raise DimensionMismatch("Twisted tensors over different Hopf algebras")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        return TwistedTensor(self.hopf, self.ring, [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return TwistedTensor(self.hopf, self.ring, [a - b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return TwistedTensor(self.hopf, self.ring, [-a for a in self.components])

    def __mul__(self, other):
        if not self._same(other):
            return NotImplemented
        out = [self.ring.zero() for _ in range(self.hopf.e)]
        r, s = self.components, other.components
        for i, j, l, m in self.hopf.support("mult"):
            if r[i] and s[j]:
                out[l] = out[l] + m * (r[i] * s[j])
        return TwistedTensor(self.hopf, self.ring, out)

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral) or n < 0:
            return NotImplemented
        result = TwistedTensor.one(self.hopf, self.ring)
        base = self
        n = int(n)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        """Multiply every component by ``c`` (no twisting)."""
        return TwistedTensor(self.hopf, self.ring, [c * a for a in self.components])

    def map(self, f, ring=None):
        return TwistedTensor(self.hopf, self.ring if ring is None else ring, [f(a) for a in self.components])

    def __getitem__(self, i):
        return self.components[i]

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other):
        if not isinstance(other, TwistedTensor):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    def __repr__(self):
        return f"TwistedTensor{self}"


def twisted_image(f, var_images, scalar_image, hopf, ring):
    """Image of a polynomial under the ring homomorphism into ``ring (x) H`` fixed on variables and scalars.

    :param f: a :class:`~pyhopf.poly.Poly`.
    :param var_images: one :class:`TwistedTensor` per variable of ``f.ring``.
    :param scalar_image: function sending a coefficient of ``f`` to its :class:`TwistedTensor`.
    """
    result = TwistedTensor.zero(hopf, ring)
    powers = {}
    for exps, c in f.terms.items():
        term = scalar_image(c)
        for v, k in enumerate(exps):
            if k:
                if (v, k) not in powers:
                    powers[(v, k)] = var_images[v] ** k
                term = term * powers[(v, k)]
        result = result + term
    return result


class OperatorSpec:
    """A candidate ``H``-action on a field tower or on a finitely presented algebra.

    :param hopf: :class:`~pyhopf.hopf.HopfData` in a good basis.
    :param ring: the carrier, a :class:`~pyhopf.fields.Field` containing ``hopf.field`` or a
        :class:`~pyhopf.poly.PolyRing` whose coefficient field contains ``hopf.field``.
    :param images: dict from generator name to the ``e`` values ``d_0(x), ..., d_{e-1}(x)``.
    :param relations: for polynomial carriers, an :class:`~pyhopf.poly.Ideal` or list of generators.
    :param coefficient_action: for polynomial carriers over a field larger than ``hopf.field``, the
        :class:`OperatorSpec` of that field.
    """

    def __init__(self, hopf, ring, images, relations=None, coefficient_action=None, name=None):
        if not hopf.is_good_basis():
            raise NotGoodBasis("Operator specs need a Hopf algebra in a good basis, use hopf.good_basis first")
        self.hopf = hopf
        self.ring = ring
        self.name = name
        self.coefficient_action = coefficient_action

        if isinstance(ring, Field):
            if not ring.embeds(hopf.field):
                raise IncompatibleFields(f"Carrier {ring} does not contain {hopf.field}")
            if relations is not None:
                raise ValueError("Field carriers cannot have relations")
            if coefficient_action is not None:
                raise ValueError("Field carriers take their tower action from images, not coefficient_action")
            self.kind = "field"
            self.generators = tuple(name for name, _ in ring.generators_over(hopf.field))
            self.relations = None
        elif isinstance(ring, PolyRing):
            if not ring.field.embeds(hopf.field):
                raise IncompatibleFields(f"Coefficient field {ring.field} does not contain {hopf.field}")
            if coefficient_action is None and ring.field != hopf.field:
                raise ValueError(f"Coefficients in {ring.field} need a coefficient_action over {hopf.field}")
            if coefficient_action is not None:
                if coefficient_action.ring != ring.field:
                    raise RingMismatch(f"coefficient_action acts on {coefficient_action.ring}, "
                                       f"coefficients lie in {ring.field}")
                if coefficient_action.hopf is not hopf and coefficient_action.hopf.e != hopf.e:
                    raise DimensionMismatch("coefficient_action uses a Hopf algebra of another dimension")
            self.kind = "ring"
            self.generators = ring.variables
            if relations is None:
                relations = Ideal(ring, [])
            elif not isinstance(relations, Ideal):
                relations = Ideal(ring, relations)
            if relations.ring != ring:
                raise RingMismatch(f"Relations live in {relations.ring}, carrier is {ring}")
            self.relations = relations
        else:
            raise TypeError(f"Carrier must be a Field or a PolyRing, got {ring!r}")

        missing = [g for g in self.generators if g not in images]
        if missing:
            raise ValueError(f"Missing operator images for {', '.join(missing)}")
        extra = [g for g in images if g not in self.generators]
        if extra:
            raise ValueError(f"Images given for unknown generators {', '.join(extra)}")
        self.images = {}
        for g in self.generators:
            values = list(images[g])
            if len(values) != hopf.e:
                raise DimensionMismatch(f"Generator {g} has {len(values)} images, expected {hopf.e}")
            self.images[g] = tuple(ring.convert(v) for v in values)
        self._gen_tensors = {g: TwistedTensor(hopf, ring, self.images[g]) for g in self.generators}

    @property
    def e(self):
        return self.hopf.e

    @property
    def bottom(self):
        return self.hopf.field

    def generator_element(self, g):
        if self.kind == "field":
            return dict(self.ring.generators_over(self.bottom))[g]
        return self.ring.gen(g)

    # the action
    # ==========
    def scalar_image(self, c):
        """``d(c) = c (x) 1_H`` for ``c`` in the bottom field."""
        c = self.bottom.convert(c)
        return TwistedTensor(self.hopf, self.ring, [self.ring.convert(u * c) for u in self.hopf.unit])

    def _field_image(self, field, x):
        if field == self.bottom:
            return self.scalar_image(x)
        gen = self._gen_tensors[field.name]
        result = TwistedTensor.zero(self.hopf, self.ring)
        power = TwistedTensor.one(self.hopf, self.ring)
        for k, c in enumerate(x.raw):
            coeff = FieldElem(field.base, c)
            if not coeff.is_zero():
                result = result + self._field_image(field.base, coeff) * power
            if k + 1 < len(x.raw):
                power = power * gen
        return result

    def coefficient_image(self, c):
        """Image of a coefficient of a polynomial carrier."""
        if self.coefficient_action is None:
            return self.scalar_image(c)
        return self.coefficient_action.apply(c).map(self.ring.constant, ring=self.ring)

    def apply(self, x):
        """``d(x)`` as a :class:`TwistedTensor`; component ``i`` is ``d_i(x)``."""
        if self.kind == "field":
            x = self.ring.convert(x)
            return self._field_image(self.ring, x)
        x = self.ring.convert(x)
        var_images = [self._gen_tensors[v] for v in self.ring.variables]
        return twisted_image(x, var_images, self.coefficient_image, self.hopf, self.ring)

    def d(self, i, x):
        return self.apply(x)[i]

    # carrier arithmetic
    # ==================
    def reduce(self, x):
        if self.kind == "field":
            return self.ring.convert(x)
        return self.relations.reduce(self.ring.convert(x))

    def equal(self, x, y):
        if self.kind == "field":
            return self.ring.convert(x) == self.ring.convert(y)
        return self.relations.contains(self.ring.convert(x) - self.ring.convert(y))

    def tensor_equal(self, a, b):
        return all(self.equal(x, y) for x, y in zip(a, b))

    def replace(self, **changes):
        kw = dict(hopf=self.hopf, ring=self.ring, images=self.images, relations=self.relations,
                  coefficient_action=self.coefficient_action, name=self.name)
        kw.update(changes)
        return OperatorSpec(**kw)

    def to_dict(self):
        d = {
            "carrier": str(self.ring),
            "images": {g: [str(v) for v in self.images[g]] for g in self.generators},
        }
        if self.kind == "ring" and not self.relations.is_zero():
            d["relations"] = [str(g) for g in self.relations.generators]
        if self.coefficient_action is not None:
            d["coefficient_action"] = self.coefficient_action.to_dict()
        return d

    def __repr__(self):
        return f"OperatorSpec(e={self.e}, carrier={self.ring}, generators={list(self.generators)})"


def extend_operator(spec, f):
    return spec.apply(f)
