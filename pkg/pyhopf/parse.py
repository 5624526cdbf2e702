"""Parsing of field elements and polynomials from strings.

Expressions are read with :func:`sympy.parsing.sympy_parser.parse_expr` and then walked into exact pyHopf objects.
Both ``^`` and ``**`` denote powers. Every known name is passed in explicitly, so single letters such as ``E``, ``I``
or ``S`` are plain symbols and never sympy constants. Floats are rejected.
"""

from fractions import Fraction

import sympy
from sympy.parsing.sympy_parser import parse_expr, standard_transformations, convert_xor

from .errors import DocumentError

_transformations = standard_transformations + (convert_xor,)


def to_sympy(text, names):
    """Parse ``text`` treating every entry of ``names`` as a symbol."""
    if not isinstance(text, str):
        raise DocumentError(f"Expected an expression string, got {text!r}")
    local_dict = {n: sympy.Symbol(n) for n in names}
    try:
        return parse_expr(text, local_dict=local_dict, transformations=_transformations, evaluate=True)
    except Exception as e:
        raise DocumentError(f"Could not parse expression {text!r}: {e}") from None


def _walk(expr, text, number, symbols, invert):
    if isinstance(expr, sympy.Float):
        raise DocumentError(f"Floating point number {expr} in {text!r}; use exact fractions")
    if isinstance(expr, sympy.Rational):
        return number(Fraction(int(expr.p), int(expr.q)))
    if isinstance(expr, sympy.Symbol):
        if expr.name not in symbols:
            raise DocumentError(f"Unknown symbol {expr.name} in {text!r}")
        return symbols[expr.name]
    if isinstance(expr, sympy.Add):
        args = [_walk(a, text, number, symbols, invert) for a in expr.args]
        total = args[0]
        for a in args[1:]:
            total = total + a
        return total
    if isinstance(expr, sympy.Mul):
        args = [_walk(a, text, number, symbols, invert) for a in expr.args]
        total = args[0]
        for a in args[1:]:
            total = total * a
        return total
    if isinstance(expr, sympy.Pow):
        base, exp = expr.args
        if not isinstance(exp, sympy.Integer):
            raise DocumentError(f"Only integer exponents are supported, got {exp} in {text!r}")
        value = _walk(base, text, number, symbols, invert)
        n = int(exp)
        if n < 0:
            return invert(value) ** (-n)
        return value ** n
    raise DocumentError(f"Unsupported expression {expr} in {text!r}")


def parse_field_element(text, field):
    """Parse a string such as ``"a+1"`` or ``"2/3*c^2"`` into an element of ``field``; symbols are the tower names."""
    symbols = {name: field.coerce(gen) for name, gen in field.generators_over(field.prime_field)}
    expr = to_sympy(text, symbols)
    value = _walk(expr, text, field.convert, symbols, lambda x: x.inverse())
    return field.convert(value)


def parse_poly(text, ring):
    """Parse a polynomial over ``ring``; symbols are the ring variables and the coefficient field's tower names."""
    field = ring.field
    symbols = {name: ring.constant(gen) for name, gen in field.generators_over(field.prime_field)}
    symbols.update({v: ring.gen(v) for v in ring.variables})

    def invert(p):
        if not p.is_constant() or p.is_zero():
            raise DocumentError(f"Cannot divide by the non-constant polynomial {p} in {text!r}")
        return ring.constant(p.constant_value().inverse())

    expr = to_sympy(text, symbols)
    return ring.convert(_walk(expr, text, ring.constant, symbols, invert))


def parse_univariate(text, name, base):
    """Coefficients (low to high degree) of a univariate polynomial in ``name`` over ``base``."""
    from .poly.core import PolyRing
    ring = PolyRing(base, (name,), order="lex")
    p = parse_poly(text, ring)
    return [p.coefficient((k,)) for k in range(p.degree() + 1)]
