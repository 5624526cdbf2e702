import numpy as np


def map_nested_dict(f, d):
    """Apply ``f`` to every leaf of a nested structure of dicts, lists and tuples (tuples come back as lists)."""
    if isinstance(d, dict):
        return {k: map_nested_dict(f, v) for k, v in d.items()}
    elif isinstance(d, (list, tuple)):
        return [map_nested_dict(f, v) for v in d]
    elif isinstance(d, np.ndarray):
        return map_nested_dict(f, d.tolist())
    else:
        return f(d)


def exact_str(x):
    """Leaf converter for JSON reports: exact values become strings, never floats."""
    if isinstance(x, (bool, str)) or x is None:
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    return str(x)


def jsonable(d):
    return map_nested_dict(exact_str, d)


def format_sum(terms):
    """Render ``[(coeff, symbol), ...]`` as ``"c1*s1+c2*s2"``.

    Zero coefficients are skipped, unit coefficients dropped, and compound coefficients such as ``a+1`` are put in
    parentheses. An empty symbol stands for a constant term.
    """
    out = ""
    for c, sym in terms:
        if c.is_zero():
            continue
        c_str = str(c)
        if not sym:
            term = c_str
        elif c.is_one():
            term = sym
        elif (-c).is_one():
            term = "-" + sym
        elif not any(ch in c_str[1:] for ch in "+-"):
            term = f"{c_str}*{sym}"
        else:
            term = f"({c_str})*{sym}"
        if not out:
            out = term
        elif term.startswith("-"):
            out += term
        else:
            out += "+" + term
    return out or "0"
