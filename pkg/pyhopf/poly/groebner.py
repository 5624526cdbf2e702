"""Buchberger's algorithm, multivariate division and ideal membership.

The engine is deterministic: critical pairs are processed by the normal selection strategy (smallest lcm of the
leading monomials first, ties broken by the pair indices), and the returned basis is the reduced Groebner basis with
monic elements sorted by decreasing leading monomial.
"""

import logging

from ..errors import RingMismatch
from .core import (Poly, MonomialOrder, _monomial_mul, _monomial_div, _monomial_divides, _monomial_lcm)

logger = logging.getLogger(__name__)


def _resolve_order(ring, order):
    return ring.order if order is None else MonomialOrder.from_name(order)


def divide(f, divisors, order=None):
    """Multivariate division of ``f`` by an ordered list of divisors.

    :returns: ``(quotients, remainder)`` with ``f == sum(q * g for q, g in zip(quotients, divisors)) + remainder``
        and no term of ``remainder`` divisible by a leading monomial of a divisor.
    """
    ring = f.ring
    order = _resolve_order(ring, order)
    key = order.key
    divs = []
    for idx, g in enumerate(divisors):
        if g.ring != ring:
            raise RingMismatch(f"Divisor {g} lives in {g.ring}, dividend in {ring}")
        if not g.is_zero():
            lm = g.leading_monomial(order)
            divs.append((idx, lm, g.terms[lm], g))

    p = dict(f.terms)
    remainder = {}
    quotients = [{} for _ in divisors]
    while p:
        m = max(p, key=key)
        c = p[m]
        for idx, lm, lc, g in divs:
            if not _monomial_divides(lm, m):
                continue
            shift = _monomial_div(m, lm)
            factor = c / lc
            quotients[idx][shift] = quotients[idx][shift] + factor if shift in quotients[idx] else factor
            for gm, gc in g.terms.items():
                t = _monomial_mul(gm, shift)
                v = p[t] - factor * gc if t in p else -factor * gc
                if v.is_zero():
                    p.pop(t, None)
                else:
                    p[t] = v
            break
        else:
            remainder[m] = c
            del p[m]
    return [Poly(ring, q) for q in quotients], Poly(ring, remainder)


def normal_form(f, basis, order=None):
    return divide(f, basis, order=order)[1]


def s_polynomial(f, g, order=None):
    order = _resolve_order(f.ring, order)
    lm_f, lm_g = f.leading_monomial(order), g.leading_monomial(order)
    lcm = _monomial_lcm(lm_f, lm_g)
    a = f.scale_monomial(_monomial_div(lcm, lm_f), f.terms[lm_f].inverse())
    b = g.scale_monomial(_monomial_div(lcm, lm_g), g.terms[lm_g].inverse())
    return a - b


def buchberger(polys, order=None, ring=None):
    """Reduced Groebner basis of the ideal generated by ``polys``.

    :param ring: only needed when ``polys`` is empty.
    """
    polys = list(polys)
    if ring is None:
        if not polys:
            raise ValueError("Cannot infer the ring of an empty generator list")
        ring = polys[0].ring
    order = _resolve_order(ring, order)
    key = order.key

    basis = []
    for f in polys:
        f = ring.convert(f)
        if f.is_zero():
            continue
        f = f.monic(order)
        if f not in basis:
            basis.append(f)
    if any(f.is_constant() for f in basis):
        return [ring.one()]

    lms = [g.leading_monomial(order) for g in basis]
    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}
    processed = 0
    while pairs:
        i, j = min(pairs, key=lambda ij: (key(_monomial_lcm(lms[ij[0]], lms[ij[1]])), ij))
        pairs.remove((i, j))
        processed += 1
        lcm = _monomial_lcm(lms[i], lms[j])
        if lcm == _monomial_mul(lms[i], lms[j]):
            # coprime leading monomials: the S-polynomial reduces to zero
            continue
        h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if h.is_zero():
            continue
        h = h.monic(order)
        if h.is_constant():
            return [ring.one()]
        basis.append(h)
        lms.append(h.leading_monomial(order))
        new = len(basis) - 1
        pairs.update((k, new) for k in range(new))
    logger.debug(f"Buchberger processed {processed} pairs, {len(basis)} basis elements before reduction")

    # minimal basis: drop elements whose leading monomial is a multiple of another one
    keep = []
    for idx, lm in enumerate(lms):
        redundant = any(
            _monomial_divides(other, lm) and (other != lm or k < idx)
            for k, other in enumerate(lms) if k != idx
        )
        if not redundant:
            keep.append(basis[idx])

    reduced = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        lm = g.leading_monomial(order)
        tail = normal_form(g - g.leading_term(order), others, order)
        reduced.append((ring.monomial(lm, g.terms[lm]) + tail).monic(order))
    reduced.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    return reduced


def is_groebner_basis(basis, order=None):
    """Buchberger criterion: every S-polynomial reduces to zero."""
    basis = [g for g in basis if not g.is_zero()]
    if not basis:
        return True
    order = _resolve_order(basis[0].ring, order)
    for j in range(len(basis)):
        for i in range(j):
            if not normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero():
                return False
    return True


class Ideal:
    """An ideal presented by generators, with reduced Groebner bases cached per monomial order."""

    def __init__(self, ring, generators=()):
        self.ring = ring
        self.generators = [ring.convert(g) for g in generators]
        self._bases = {}

    def groebner_basis(self, order=None):
        order = _resolve_order(self.ring, order)
        if order not in self._bases:
            self._bases[order] = buchberger(self.generators, order=order, ring=self.ring)
        return list(self._bases[order])

    def reduce(self, f, order=None):
        f = self._own(f)
        order = _resolve_order(self.ring, order)
        return normal_form(f, self.groebner_basis(order), order=order)

    def contains(self, f):
        return self.reduce(f).is_zero()

    __contains__ = contains

    def contains_ideal(self, other):
        if other.ring != self.ring:
            raise RingMismatch(f"Ideal in {other.ring} cannot be compared with an ideal in {self.ring}")
        return all(self.contains(g) for g in other.generators)

    def is_unit(self):
        basis = self.groebner_basis()
        return len(basis) == 1 and basis[0].is_constant()

    def is_zero(self):
        return all(g.is_zero() for g in self.generators)

    def _own(self, f):
        if isinstance(f, Poly) and f.ring != self.ring:
            raise RingMismatch(f"{f} lives in {f.ring}, the ideal in {self.ring}")
        return self.ring.convert(f)

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def __repr__(self):
        return f"Ideal({self.ring!r}, [{', '.join(str(g) for g in self.generators)}])"


def groebner_basis(ideal, order=None):
    """Compute and cache the reduced Groebner basis of ``ideal``; returns the ideal itself."""
    ideal.groebner_basis(order)
    return ideal


def ideal_membership(f, ideal):
    return ideal.contains(f)


def ideal_in_ideal(inner, outer):
    """True if every generator of ``inner`` lies in ``outer``."""
    return outer.contains_ideal(inner)
