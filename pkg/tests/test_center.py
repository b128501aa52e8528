from fractions import Fraction

import pytest

from hurwitz_tau.center import (
    CenterElement,
    characteristic_map,
    class_structure_constants,
    class_to_idem,
    center_multiply,
    cut_and_join_operator,
    euler_operator,
    group_algebra_of,
    idem_to_class,
    project_to_classes,
    unit_class,
    unit_idempotent,
)
from hurwitz_tau.errors import CentralityError
from hurwitz_tau.groupalg import class_sum, jm_element, jm_power_sum
from hurwitz_tau.partitions import partitions_of
from hurwitz_tau.symfunc import p_basis, s_basis, to_schur


def test_n2_idempotents_by_hand():
    f2 = idem_to_class(unit_idempotent(2, (2,)))
    assert f2.coords == {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}
    f11 = idem_to_class(unit_idempotent(2, (1, 1)))
    assert f11.coords == {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)}


def test_roundtrips():
    for n in range(9):
        for lam in partitions_of(n):
            v = unit_idempotent(n, lam)
            assert class_to_idem(idem_to_class(v)).coords == v.coords
            w = unit_class(n, lam)
            assert idem_to_class(class_to_idem(w)).coords == w.coords


def test_idempotent_multiplication():
    for n in range(1, 6):
        for lam in partitions_of(n):
            f = unit_idempotent(n, lam)
            assert center_multiply(f, f).coords == f.coords
            for nu in partitions_of(n):
                if nu != lam:
                    assert center_multiply(f, unit_idempotent(n, nu)).coords == {}


def test_c2_squared_n4():
    product = center_multiply(unit_class(4, (2, 1, 1)), unit_class(4, (2, 1, 1)))
    assert product.coords == {
        (3, 1): Fraction(3),
        (2, 2): Fraction(2),
        (1, 1, 1, 1): Fraction(6),
    }


def test_center_multiply_agrees_with_group_algebra():
    for n in range(1, 6):
        for mu in partitions_of(n):
            for nu in partitions_of(n):
                fast = center_multiply(unit_class(n, mu), unit_class(n, nu))
                slow = project_to_classes(class_sum(n, mu) * class_sum(n, nu))
                assert fast.coords == slow.coords


def test_structure_constants_are_nonnegative_integers():
    constants = class_structure_constants(4)
    for table in constants.values():
        for value in table.values():
            assert value.denominator == 1 and value >= 0


def test_characteristic_map_examples():
    assert characteristic_map(unit_class(2, (2,))).terms == {(2,): Fraction(1, 2)}
    f = characteristic_map(unit_idempotent(2, (2,)))
    assert f.basis == "s" and f.terms == {(2,): Fraction(1, 2)}


def test_characteristic_map_frobenius_consistency():
    for n in range(1, 7):
        for mu in partitions_of(n):
            from hurwitz_tau.characters import character_table
            from hurwitz_tau.partitions import z_of

            table = character_table(n)
            via_schur = to_schur(characteristic_map(unit_class(n, mu)))
            expected = {
                lam: Fraction(table.value(lam, mu), z_of(mu))
                for lam in partitions_of(n)
                if table.value(lam, mu)
            }
            assert via_schur.terms == expected


def test_project_to_classes():
    assert project_to_classes(class_sum(3, (2, 1))).coords == {(2, 1): Fraction(1)}
    assert project_to_classes(jm_power_sum(4, 1)).coords == {(2, 1, 1): Fraction(1)}
    with pytest.raises(CentralityError):
        project_to_classes(jm_element(3, 3))


def test_group_algebra_roundtrip():
    for lam in partitions_of(4):
        v = unit_idempotent(4, lam)
        back = project_to_classes(group_algebra_of(v))
        assert back.coords == idem_to_class(v).coords


def test_euler_operator():
    f = p_basis({(2, 1): Fraction(1, 2)})
    assert euler_operator(f).terms == {(2, 1): Fraction(3, 2)}


def test_cut_and_join_is_multiplication_by_c2():
    for n in range(2, 7):
        c2 = (2,) + (1,) * (n - 2)
        for mu in partitions_of(n):
            lhs = cut_and_join_operator(characteristic_map(unit_class(n, mu)))
            rhs = characteristic_map(
                center_multiply(unit_class(n, c2), unit_class(n, mu))
            )
            assert lhs == rhs, (n, mu)


def test_cut_and_join_cross_basis_input():
    f = s_basis({(2,): 1})
    g = p_basis({(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)})
    assert cut_and_join_operator(f) == cut_and_join_operator(g)


def test_center_element_validation():
    with pytest.raises(ValueError):
        CenterElement(3, "C", {(2, 2): Fraction(1)})
    with pytest.raises(ValueError):
        CenterElement(3, "X", {})
