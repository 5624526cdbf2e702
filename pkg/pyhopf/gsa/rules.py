"""Rule tables of a Hopf algebra in a good basis, and transport of operators along basis changes.

The product rule expresses ``d_l(x*y)`` through the multiplication constants, the iterativity rule expresses
``d_i o d_j`` through the comultiplication constants. ``d_0`` is the identity and is written as the bare argument.
"""

from ..errors import NotGoodBasis
from ..fields import linalg
from ..hopf.core import change_basis
from ..util import format_sum, jsonable
from .core import OperatorSpec


class RuleTable:
    def __init__(self, kind, lines, entries):
        self.kind = kind
        self.lines = list(lines)
        self.entries = list(entries)

    def __iter__(self):
        return iter(self.lines)

    def __len__(self):
        return len(self.lines)

    def __getitem__(self, item):
        return self.lines[item]

    def to_dict(self):
        return jsonable({"kind": self.kind, "rules": self.lines, "entries": self.entries})

    def summary(self, do_print=True, do_return=False):
        title = f"{self.kind} rules"
        msg = f"{title}\n{'=' * len(title)}\n" + "\n".join(self.lines) + "\n"

        if do_print:
            print(msg)

        if do_return:
            return msg

    def __repr__(self):
        return f"RuleTable({self.kind!r}, {len(self.lines)} rules)"


def _require_good(h):
    if not h.is_good_basis():
        raise NotGoodBasis("Rule tables are only defined in a good basis")


def _op(i, arg):
    return arg if i == 0 else f"d{i}({arg})"


def derive_product_rules(h, x="x", y="y"):
    """``d_l(x*y) = sum_{i,j} m[i, j, l] d_i(x) d_j(y)`` for every ``l``."""
    _require_good(h)
    e = h.e
    lines, entries = [], []
    for l in range(e):
        terms = [(h.mult[i, j, l], f"{_op(i, x)}*{_op(j, y)}") for i in range(e) for j in range(e)]
        lines.append(f"{_op(l, f'{x}*{y}')} = {format_sum(terms)}")
        entries.append({
            "l": l,
            "terms": [{"i": i, "j": j, "coeff": h.mult[i, j, l]}
                      for i in range(e) for j in range(e) if not h.mult[i, j, l].is_zero()],
        })
    return RuleTable("product", lines, entries)


def derive_iterativity_rules(h):
    """``d_i o d_j = sum_l c[i, j, l] d_l`` for ``i, j >= 1``."""
    _require_good(h)
    e = h.e
    lines, entries = [], []
    for i in range(1, e):
        for j in range(1, e):
            terms = [(h.comult[i, j, l], f"d{l}") for l in range(e)]
            lines.append(f"d{i}∘d{j} = {format_sum(terms)}")
            entries.append({
                "i": i,
                "j": j,
                "terms": [{"l": l, "coeff": h.comult[i, j, l]} for l in range(e) if not h.comult[i, j, l].is_zero()],
            })
    return RuleTable("iterativity", lines, entries)


def operator_change_matrix(matrix, field):
    """Matrix ``T`` with ``d'_k = sum_i T[k, i] d_i`` after ``change_basis(H, matrix)``.

    Since ``b_i = sum_k P[i, k] b'_k`` with ``P = matrix^-1``, ``T`` is the transpose of ``P``.
    """
    return linalg.transpose(linalg.inverse(matrix, field=field))


def format_operator_change(t):
    return [f"d{k}' = " + format_sum((t[k, i], f"d{i}") for i in range(t.shape[1])) for k in range(t.shape[0])]


def transport_spec(spec, matrix):
    """Express ``spec`` through the operators of ``change_basis(spec.hopf, matrix)``."""
    hopf = change_basis(spec.hopf, matrix)
    t = operator_change_matrix(matrix, spec.hopf.field)
    e = spec.e
    images = {}
    for g in spec.generators:
        old = spec.images[g]
        new = []
        for k in range(e):
            total = spec.ring.zero()
            for i in range(e):
                if not t[k, i].is_zero():
                    total = total + t[k, i] * old[i]
            new.append(total)
        images[g] = new
    coefficient_action = None
    if spec.coefficient_action is not None:
        coefficient_action = transport_spec(spec.coefficient_action, matrix)
    return OperatorSpec(hopf, spec.ring, images, relations=spec.relations, coefficient_action=coefficient_action,
                        name=spec.name)
