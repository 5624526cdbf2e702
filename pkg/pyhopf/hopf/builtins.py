"""Constructors for the standard finite group schemes.

Builtins are registered by name with :func:`register_builtin` and created with :func:`get_builtin`, e.g.::

    from pyhopf.fields import GF
    from pyhopf.hopf import get_builtin

    ga1 = get_builtin("truncated_additive", GF(2), p=2, m=1)
"""

import logging
from math import comb

import numpy as np
from sympy.combinatorics.named_groups import AbelianGroup, CyclicGroup, DihedralGroup, SymmetricGroup

from ..errors import CharacteristicObstruction, InvalidGroupTable
from .core import HopfData

logger = logging.getLogger(__name__)

_builtins = {}


def register_builtin(name):
    """Decorator registering a constructor ``func(field, **params) -> HopfData`` under ``name``."""
    def decorator(func):
        if name in _builtins:
            raise ValueError(f"Builtin {name} is already registered")
        _builtins[name] = func
        return func
    return decorator


def list_builtins():
    return sorted(_builtins)


def get_builtin(name, field, **params):
    if name not in _builtins:
        raise KeyError(f"Unknown builtin group scheme {name!r}, available: {', '.join(list_builtins())}")
    h = _builtins[name](field, **params)
    h.metadata.setdefault("builtin", name)
    h.metadata.setdefault("params", {k: v for k, v in params.items() if k != "table"})
    return h


def _zeros(field, shape):
    arr = np.empty(shape, dtype=object)
    zero = field.zero()
    for idx in np.ndindex(*shape):
        arr[idx] = zero
    return arr


def _unit_vector(field, e, k=0):
    v = _zeros(field, (e,))
    v[k] = field.one()
    return v


# groups
# ======
_named_groups = {
    "cyclic": lambda n: CyclicGroup(n),
    "dihedral": lambda n: DihedralGroup(n),
    "symmetric": lambda n: SymmetricGroup(n),
    "klein": lambda n=4: AbelianGroup(2, 2),
}


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def named_group_table(name, n=None):
    """Cayley table of a named group; elements are sorted by their permutation array form, identity first."""
    if name == "cyclic":
        return cyclic_table(n)
    if name not in _named_groups:
        raise InvalidGroupTable(f"Unknown named group {name!r}, available: {', '.join(sorted(_named_groups))}")
    group = _named_groups[name](n) if n is not None else _named_groups[name]()
    elements = sorted(group.elements, key=lambda g: g.array_form)
    index = {tuple(g.array_form): k for k, g in enumerate(elements)}
    return [[index[tuple((g * h).array_form)] for h in elements] for g in elements]


def validate_group_table(table):
    """Check the group axioms and return ``(table, identity)`` as lists of ints.

    :raises InvalidGroupTable: naming the failing axiom.
    """
    try:
        table = [[int(x) for x in row] for row in table]
    except (TypeError, ValueError):
        raise InvalidGroupTable("Cayley table entries must be integers") from None
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise InvalidGroupTable("Cayley table must be a nonempty square array")
    if any(not 0 <= x < n for row in table for x in row):
        raise InvalidGroupTable(f"Cayley table entries must lie in [0, {n})")
    identity = next((k for k in range(n) if all(table[k][j] == j and table[j][k] == j for j in range(n))), None)
    if identity is None:
        raise InvalidGroupTable("Cayley table has no identity element")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise InvalidGroupTable(f"Cayley table is not associative at ({a}, {b}, {c})")
    for a in range(n):
        if not any(table[a][b] == identity for b in range(n)):
            raise InvalidGroupTable(f"Element {a} has no inverse")
    return table, identity


@register_builtin("constant_group")
def constant_group(field, table=None, group=None, n=None):
    """Constant group scheme ``G_k = spec(Func(G, k))`` in the indicator basis ``e_g``.

    :param table: Cayley table ``table[g][h] = gh`` on ``0..|G|-1``.
    :param group: alternatively a named group (``cyclic``, ``dihedral``, ``symmetric``, ``klein``) with size ``n``.

    The identity is moved to slot 0 (the indicator basis is then good); ``metadata["elements"]`` lists the original
    labels in slot order.
    """
    if table is None:
        if group is None:
            raise InvalidGroupTable("constant_group needs a Cayley table or a named group")
        table = named_group_table(group, n)
    table, identity = validate_group_table(table)
    size = len(table)
    order = [identity] + [g for g in range(size) if g != identity]
    slot = {g: k for k, g in enumerate(order)}
    # relabelled table on slots
    t = [[slot[table[order[a]][order[b]]] for b in range(size)] for a in range(size)]

    one = field.one()
    mult = _zeros(field, (size, size, size))
    comult = _zeros(field, (size, size, size))
    antipode = _zeros(field, (size, size))
    for g in range(size):
        mult[g, g, g] = one
        for h in range(size):
            comult[g, h, t[g][h]] = one
            if t[g][h] == 0:
                antipode[g, h] = one
    unit = np.array([one] * size, dtype=object)
    return HopfData(field, mult, comult, _unit_vector(field, size), unit, antipode=antipode,
                    basis_names=[f"e{g}" for g in order],
                    metadata={"elements": order, "table": t})


@register_builtin("trivial")
def trivial(field):
    one = field.one()
    return HopfData(field, [[[one]]], [[[one]]], [one], [one], antipode=[[one]], basis_names=["1"])


def _power_names(var, n):
    return ["1"] + [var if k == 1 else f"{var}^{k}" for k in range(1, n)]


def _truncated_mult(field, n):
    mult = _zeros(field, (n, n, n))
    for i in range(n):
        for j in range(n - i):
            mult[i, j, i + j] = field.one()
    return mult


def _require_characteristic(field, p, name):
    if field.characteristic != p:
        raise CharacteristicObstruction(
            f"{name} with p={p} needs a field of characteristic {p}, got {field} of characteristic "
            f"{field.characteristic}")


@register_builtin("truncated_additive")
def truncated_additive(field, p, m=1):
    """Frobenius kernel ``G_a[m] = spec(k[v]/(v^(p^m)))`` with additive comultiplication, basis ``v^i``."""
    p, m = int(p), int(m)
    _require_characteristic(field, p, "truncated_additive")
    n = p ** m
    comult = _zeros(field, (n, n, n))
    for i in range(n):
        for j in range(n - i):
            comult[i, j, i + j] = field.convert(comb(i + j, i))
    return HopfData(field, _truncated_mult(field, n), comult, _unit_vector(field, n), _unit_vector(field, n),
                    basis_names=_power_names("v", n))


@register_builtin("roots_of_unity")
def roots_of_unity(field, n):
    """``mu_n = spec(k[eps]/(eps^n - 1))`` with ``mu(eps) = eps (x) eps``, in the basis ``eps^l``.

    In characteristic ``p`` with ``p | n`` the scheme is not etale; it is still built and a warning is recorded.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"roots_of_unity needs n >= 1, got {n}")
    one = field.one()
    mult = _zeros(field, (n, n, n))
    comult = _zeros(field, (n, n, n))
    for i in range(n):
        comult[i, i, i] = one
        for j in range(n):
            mult[i, j, (i + j) % n] = one
    metadata = {}
    p = field.characteristic
    if p and n % p == 0:
        msg = f"characteristic {p} divides n={n}: mu_{n} is not etale"
        logger.warning(msg)
        metadata["warnings"] = [msg]
    counit = np.array([one] * n, dtype=object)
    return HopfData(field, mult, comult, counit, _unit_vector(field, n), basis_names=_power_names("eps", n),
                    metadata=metadata)


@register_builtin("multiplicative_kernel")
def multiplicative_kernel(field, p):
    """Frobenius kernel ``G_m[1] = spec(k[v]/(v^p))``, ``v = t - 1``, ``mu(v) = v (x) 1 + 1 (x) v + v (x) v``."""
    p = int(p)
    _require_characteristic(field, p, "multiplicative_kernel")
    comult = _zeros(field, (p, p, p))
    # mu(v^l) = sum_k binom(l,k) (-1)^(l-k) t^k (x) t^k with t^k = sum_a binom(k,a) v^a
    for l in range(p):
        for a in range(p):
            for b in range(p):
                total = sum(comb(l, k) * (-1) ** (l - k) * comb(k, a) * comb(k, b) for k in range(l + 1))
                comult[a, b, l] = field.convert(total)
    return HopfData(field, _truncated_mult(field, p), comult, _unit_vector(field, p), _unit_vector(field, p),
                    basis_names=_power_names("v", p))
