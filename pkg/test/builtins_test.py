import pytest

from pyhopf.errors import CharacteristicObstruction, InvalidGroupTable
from pyhopf.fields import QQ, GF
from pyhopf.hopf import (verify_bialgebra, solve_antipode, get_builtin, list_builtins, register_builtin,
                         constant_group, trivial, truncated_additive, roots_of_unity, multiplicative_kernel, product,
                         named_group_table, validate_group_table)


def _all_builtins():
    cases = [("trivial", trivial(QQ))]
    for n in range(1, 7):
        cases.append((f"cyclic{n}", constant_group(QQ, group="cyclic", n=n)))
    cases.append(("S3", constant_group(QQ, group="symmetric", n=3)))
    cases.append(("D3", constant_group(GF(5), group="dihedral", n=3)))
    cases.append(("klein", constant_group(GF(2), group="klein")))
    for p in (2, 3):
        for m in (1, 2):
            cases.append((f"Ga[{m}] p={p}", truncated_additive(GF(p), p, m)))
        cases.append((f"Gm[1] p={p}", multiplicative_kernel(GF(p), p)))
    for n in (2, 3, 4):
        cases.append((f"mu{n}", roots_of_unity(QQ, n)))
    cases.append(("Ga[1] x Z/2", product(truncated_additive(GF(2), 2), constant_group(GF(2), group="cyclic", n=2))))
    cases.append(("mu2 x Z/3", product(roots_of_unity(QQ, 2), constant_group(QQ, group="cyclic", n=3))))
    return cases


@pytest.mark.parametrize("name,h", _all_builtins())
def test_builtins_are_hopf_algebras(name, h):
    report = verify_bialgebra(h)
    assert report.passed, report.summary(do_print=False, do_return=True)
    s = solve_antipode(h)
    assert verify_bialgebra(h.with_antipode(s)).passed


def test_registry():
    names = list_builtins()
    for n in ("constant_group", "trivial", "truncated_additive", "roots_of_unity", "multiplicative_kernel"):
        assert n in names
    h = get_builtin("truncated_additive", GF(3), p=3, m=1)
    assert h.metadata["builtin"] == "truncated_additive"
    assert h.metadata["params"] == {"p": 3, "m": 1}
    assert h.e == 3
    with pytest.raises(KeyError):
        get_builtin("sl2", QQ)
    with pytest.raises(ValueError):
        register_builtin("trivial")(lambda field: None)


def test_constant_group_relabels_identity():
    # identity is element 1 in this table of Z/2
    h = constant_group(QQ, table=[[1, 0], [0, 1]])
    assert h.metadata["elements"] == [1, 0]
    assert h.is_good_basis()
    assert verify_bialgebra(h).passed


def test_group_tables():
    s3 = named_group_table("symmetric", 3)
    assert len(s3) == 6
    table, identity = validate_group_table(s3)
    assert identity == 0
    assert any(table[a][b] != table[b][a] for a in range(6) for b in range(6))
    assert not constant_group(QQ, table=s3).is_cocommutative()
    assert constant_group(QQ, group="cyclic", n=4).is_cocommutative()
    assert len(named_group_table("klein")) == 4
    with pytest.raises(InvalidGroupTable):
        validate_group_table([[0, 1], [1, 1]])
    with pytest.raises(InvalidGroupTable):
        validate_group_table([[0, 1], [1]])
    with pytest.raises(InvalidGroupTable):
        named_group_table("monster")
    with pytest.raises(InvalidGroupTable):
        constant_group(QQ)


def test_characteristic():
    with pytest.raises(CharacteristicObstruction):
        truncated_additive(QQ, 2)
    with pytest.raises(CharacteristicObstruction):
        multiplicative_kernel(GF(3), 2)
    h = roots_of_unity(GF(3), 3)
    assert h.metadata["warnings"]
    assert verify_bialgebra(h).notes == h.metadata["warnings"]


def test_truncated_additive_tables():
    h = truncated_additive(GF(2), 2, 2)
    assert h.basis_names == ("1", "v", "v^2", "v^3")
    # mu(v^2) = v^2 (x) 1 + 1 (x) v^2 in characteristic 2
    assert h.comult[1, 1, 2] == GF(2)(0)
    assert h.comult[2, 0, 2] == GF(2)(1)
    assert h.comult[0, 2, 2] == GF(2)(1)
    assert h.mult[1, 2, 3] == GF(2)(1)
    assert h.mult[2, 2, 0] == GF(2)(0)


def test_multiplicative_kernel_tables():
    h = multiplicative_kernel(GF(2), 2)
    # mu(v) = v (x) 1 + 1 (x) v + v (x) v
    assert [h.comult[a, b, 1] for a in range(2) for b in range(2)] == [GF(2)(0), GF(2)(1), GF(2)(1), GF(2)(1)]
    assert h.is_good_basis()
