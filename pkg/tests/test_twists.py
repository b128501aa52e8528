from fractions import Fraction
from math import factorial

import pytest

from hurwitz_tau.center import unit_class, unit_idempotent
from hurwitz_tau.errors import SingularParameterError
from hurwitz_tau.groupalg import WalkQuery, count_walks, plain, weakly_monotone
from hurwitz_tau.partitions import content_sum, partitions_of, size, z_of
from hurwitz_tau.series import SeriesSpace
from hurwitz_tau.twists import (
    AlphaQConvolution,
    E,
    Exp,
    ExpConvolution,
    H,
    NumericHConvolution,
    Scale,
    apply_twist,
    connection_coeffs,
    intertwine,
    okounkov_coeff,
    okounkov_exponents,
    symmetry_check,
    twist,
    twist_eigenvalue,
)


def test_h_eigenvalue_on_2_1():
    spec = twist((H("z"),), (6,))
    eig = twist_eigenvalue(spec, (2, 1))
    # contents {-1, 0, 1}: 1/(1-z^2)
    for k in range(7):
        assert eig.coeff(z=k) == (1 if k % 2 == 0 else 0)


def test_e_eigenvalue_on_2_1():
    spec = twist((E("w"),), (6,))
    eig = twist_eigenvalue(spec, (2, 1))
    assert eig.coeff(w=0) == 1
    assert eig.coeff(w=1) == 0
    assert eig.coeff(w=2) == -1
    assert eig.coeff(w=3) == 0


def test_exp_eigenvalue_tracks_size_and_content():
    spec = twist((Exp("q", "beta"),), (6, 4))
    eig = twist_eigenvalue(spec, (2, 1))
    # |lam| = 3 and cont = 0: the eigenvalue is exactly q^3
    assert eig.coeff(q=3) == 1
    assert eig.coeff(q=3, beta=1) == 0
    eig3 = twist_eigenvalue(spec, (3,))
    # cont((3,)) = 3: q^3 e^{3 beta}
    assert eig3.coeff(q=3, beta=2) == Fraction(9, 2)


def test_scale_eigenvalue():
    spec = twist((Scale("q"),), (5,))
    assert twist_eigenvalue(spec, (2, 2)).coeff(q=4) == 1


def test_apply_twist_diagonal_on_idempotents():
    spec = twist((H("z"),), (4,))
    for lam in partitions_of(3):
        twisted = apply_twist(spec, unit_idempotent(3, lam))
        assert twisted.coords == {lam: twist_eigenvalue(spec, lam)}


def test_apply_twist_beta_squared_coefficient():
    spec = twist((Exp("q", "beta"),), (3, 2))
    twisted = apply_twist(spec, unit_class(3, (1, 1, 1)))
    series = twisted.coeff((3,))
    # coefficient of beta^2/2 is the 2-step walk count 3
    assert series.coeff(q=3, beta=2) * 2 == 3


def test_connection_coeffs_match_walks_n3():
    spec = twist((Exp("q", "beta"),), (3, 3))
    coeffs = connection_coeffs(spec, 3)
    for lam in partitions_of(3):
        for mu in partitions_of(3):
            for b in range(4):
                got = coeffs[(lam, mu)].coeff(q=3, beta=b) * factorial(b)
                want = count_walks(WalkQuery(3, lam, mu, plain(b)))
                assert got == want
    assert symmetry_check(coeffs, 3)


def test_connection_coeffs_weak_monotone_n4():
    spec = twist((H("z"),), (5,))
    coeffs = connection_coeffs(spec, 4)
    for lam in partitions_of(4):
        for mu in partitions_of(4):
            for k in range(6):
                got = coeffs[(lam, mu)].coeff(z=k)
                want = count_walks(WalkQuery(4, lam, mu, weakly_monotone(k)))
                assert got == want


def test_intertwine_rho_branches():
    spec = twist((H("z"),), (6,))
    conv = intertwine(spec)
    space = spec.space()
    assert conv.rho(2).series == space.geom(1, "z") * space.geom(2, "z")
    assert conv.rho(0).series == space.one()
    assert conv.rho(-1).series == space.one()
    assert conv.rho(-2).series == space.linear(1, "z")
    conv.check_ratio(-5, 6)


def test_intertwine_eigenvalue_identity():
    for names, caps in ((("z",), (8,)), (("z1", "z2"), (5, 5))):
        spec = twist(tuple(H(z) for z in names), caps)
        conv = intertwine(spec)
        for n in range(7):
            for lam in partitions_of(n):
                value = conv.r_lambda(lam, 0)
                assert value.qexp == 0
                assert value.series == twist_eigenvalue(spec, lam)


def test_intertwine_rejects_non_h_factors():
    with pytest.raises(ValueError):
        intertwine(twist((E("w"),), (3,)))


def test_numeric_family_and_singularities():
    conv = NumericHConvolution([Fraction(1, 3)])
    assert conv.rho(2) == Fraction(9, 2)  # 1/((1-1/3)(1-2/3))
    assert conv.r(2) == Fraction(3)
    assert conv.rho(-3) == Fraction(1 + Fraction(1, 3)) * Fraction(1 + Fraction(2, 3))
    with pytest.raises(SingularParameterError):
        conv.rho(3)
    with pytest.raises(SingularParameterError):
        conv.r(3)
    # negative side stays regular for this z
    assert conv.r_lambda((1, 1, 1), 0) != 0
    # ... but a negative reciprocal-integer z hits the j<0 branch
    with pytest.raises(SingularParameterError):
        NumericHConvolution([Fraction(-1, 2)]).rho(-3)


def test_alpha_q_rejects_positive_integer_alpha():
    space = SeriesSpace(("q",), (8,))
    with pytest.raises(ValueError):
        AlphaQConvolution(2, space)
    AlphaQConvolution(Fraction(-3), space)  # fine


def test_alpha_q_branch_equals_closed_form():
    space = SeriesSpace(("q",), (20,))
    for alpha in (Fraction(1, 2), Fraction(-3), Fraction(7, 3)):
        fam = AlphaQConvolution(alpha, space)
        fam.check_ratio(-3, 6)
        for N in range(6):
            for n in range(6):
                for lam in partitions_of(n):
                    if len(lam) > N:
                        continue
                    assert fam.r_lambda(lam, N) == fam.closed_form_r_lambda(lam, N)


def test_alpha_q_single_row_is_plain_pochhammer():
    # r_lambda with lam=(k) at N=1 reduces to q^k (1-alpha)_k / k!
    space = SeriesSpace(("q",), (12,))
    fam = AlphaQConvolution(Fraction(1, 2), space)
    for k in range(5):
        value = fam.r_lambda((k,) if k else (), 1)
        assert value.qexp == 0
        assert value.series == fam.rho(k).series


def test_exp_convolution_branch_vs_schur_normalisation():
    space = SeriesSpace(("z",), (10,))
    fam = ExpConvolution(2, space)
    fam.check_ratio(-3, 5)
    for n in range(5):
        for lam in partitions_of(n):
            branch = fam.r_lambda(lam, 2)
            assert branch.qexp == 0
            if len(lam) > 2:
                assert fam.schur_expansion_r_lambda(lam).is_zero()
                continue
            # branch product = (-Nz)^{N(N-1)/2} * conventional coefficient
            shift = space.monomial(Fraction(-2), z=1)
            assert branch.series == shift * fam.schur_expansion_r_lambda(lam)


def test_alpha_q_specialized_twist_eigenvalue():
    # the numeric specialization base = q(1 - alpha/N), z = -1/N,
    # w = +1/(N - alpha) turns the H*E content product into
    # q^{|lam|} (N-alpha)_lam / (N)_lam cell by cell
    from hurwitz_tau.partitions import contents, pochhammer_partition

    for alpha in (Fraction(1, 2), Fraction(-3), Fraction(7, 3)):
        for N in range(1, 5):
            z = Fraction(-1, N)
            w = Fraction(1, N - alpha)
            base = 1 - alpha / Fraction(N)
            for n in range(6):
                for lam in partitions_of(n):
                    if len(lam) > N:
                        continue
                    value = base ** size(lam)
                    for c in contents(lam):
                        value *= (1 + w * c) / (1 - z * c)
                    target = pochhammer_partition(N - alpha, lam) / pochhammer_partition(
                        N, lam
                    )
                    assert value == target, (lam, N, alpha)


def test_okounkov_series_and_exponents():
    space = SeriesSpace(("q", "beta"), (6, 4))
    s = okounkov_coeff((2, 1), space)
    assert s.coeff(q=3) == 1 and s.coeff(q=3, beta=1) == 0
    for N in range(5):
        for n in range(6):
            for lam in partitions_of(n):
                qe, be = okounkov_exponents(lam, N)
                assert qe == N * (N - 1) // 2 + size(lam)
                assert be == N * (N * N - 1) // 6 + N * size(lam) + content_sum(lam)


def test_family_coeffs_dispatcher():
    from hurwitz_tau.twists import family_coeffs

    sp_qb = SeriesSpace(("q", "beta"), (5, 3))
    assert family_coeffs("okounkov", (2, 1), 0, sp_qb).coeff(q=3) == 1
    sp_z = SeriesSpace(("z",), (6,))
    assert family_coeffs("hciz_exp", (1, 1, 1), 2, sp_z).is_zero()
    sp_q = SeriesSpace(("q",), (8,))
    value = family_coeffs("alpha_q", (2,), 1, sp_q, alpha=Fraction(1, 2))
    fam = AlphaQConvolution(Fraction(1, 2), sp_q)
    assert value == fam.closed_form_r_lambda((2,), 1).series
    assert family_coeffs("alpha_q", (1, 1), 1, sp_q, alpha=Fraction(1, 2)).is_zero()
    sp_w = SeriesSpace(("q", "w1"), (4, 3))
    mm = family_coeffs("multimonotone", (2,), 0, sp_w, w_params=("w1",))
    spec = twist((Scale("q"), E("w1")), (4, 3))
    assert mm == twist_eigenvalue(spec, (2,), sp_w)
    with pytest.raises(ValueError):
        family_coeffs("nope", (1,), 0, sp_q)


def test_twist_param_validation():
    with pytest.raises(ValueError):
        twist((H("z"), E("z")), (3, 3))  # duplicate names collapse to one param
    spec = twist((H("z"), E("w")), 4)
    assert spec.space().caps == (4, 4)
