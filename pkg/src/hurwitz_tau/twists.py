"""Central twist operators and their convolution-coefficient counterparts.

A twist is a product of generating-function atoms evaluated at the
Jucys-Murphy elements:

    H(z):        prod_b 1/(1 - z J_b)      (complete symmetric functions)
    E(w):        prod_b (1 + w J_b)        (elementary symmetric functions)
    Exp(q,beta): q^{P_0} e^{beta P_1}      (step-counting exponential)
    Scale(q):    q^{P_0}                   (pure sheet grading)

Acting on the idempotent F_lam each atom is diagonal with a content-product
eigenvalue; acting on the class sums C_lam it produces the connection
coefficients

    G_{lam mu} = (1/Z_lam) sum_nu G(cont(nu)) chi_nu(lam) chi_nu(mu),

whose series coefficients count constrained transposition walks.  The
convolution side parametrises the same eigenvalues through families
rho_j / r_j = rho_j/rho_{j-1} and the shifted content product

    r_lam(N) = r_0(N) prod_{(i,j) in lam} r_{N+j-i}.

The q^{P_0} direction is always tracked as an exact integer exponent (see
QPow); only genuinely formal directions (z, w, beta) are series-expanded.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .center import IDEMPOTENTS, CenterElement, class_to_idem, idem_to_class
from .characters import character_table
from .errors import SingularParameterError
from .partitions import (
    Partition,
    cells,
    content_sum,
    contents,
    partitions_of,
    pochhammer,
    pochhammer_partition,
    size,
    z_of,
)
from .series import SeriesSpace, TruncSeries

# -- twist specifications ----------------------------------------------------

@dataclass(frozen=True)
class H:
    param: str


@dataclass(frozen=True)
class E:
    param: str


@dataclass(frozen=True)
class Exp:
    q_param: str
    beta_param: str


@dataclass(frozen=True)
class Scale:
    q_param: str


@dataclass(frozen=True)
class TwistSpec:
    factors: tuple
    caps: tuple  # parallel to params(), one cap per parameter

    def params(self) -> tuple[str, ...]:
        names: list[str] = []
        for f in self.factors:
            if isinstance(f, H) or isinstance(f, E):
                new = (f.param,)
            elif isinstance(f, Exp):
                new = (f.q_param, f.beta_param)
            elif isinstance(f, Scale):
                new = (f.q_param,)
            else:
                raise TypeError(f"unknown twist factor {f!r}")
            for name in new:
                if name not in names:
                    names.append(name)
        return tuple(names)

    def space(self) -> SeriesSpace:
        return SeriesSpace(self.params(), self.caps)


def twist(factors, caps) -> TwistSpec:
    factors = tuple(factors)
    params = TwistSpec(factors, ()).params()
    if isinstance(caps, int):
        caps = (caps,) * len(params)
    else:
        caps = tuple(caps)
    if len(caps) != len(params):
        raise ValueError("one cap per distinct parameter required")
    return TwistSpec(factors, caps)


def twist_eigenvalue(spec: TwistSpec, lam: Partition, space: SeriesSpace | None = None) -> TruncSeries:
    """Content-product eigenvalue of the twist on F_lam, as a series."""
    lam = tuple(lam)
    if space is None:
        space = spec.space()
    cs = contents(lam)
    result = space.one()
    for f in spec.factors:
        if isinstance(f, H):
            for c in cs:
                result = result * space.geom(c, f.param)
        elif isinstance(f, E):
            for c in cs:
                result = result * space.linear(c, f.param)
        elif isinstance(f, Exp):
            result = result * space.monomial(1, **{f.q_param: size(lam)})
            result = result * space.exp_linear(content_sum(lam), f.beta_param)
        elif isinstance(f, Scale):
            result = result * space.monomial(1, **{f.q_param: size(lam)})
    return result


def connection_coeffs(spec: TwistSpec, n: int) -> dict[tuple[Partition, Partition], TruncSeries]:
    """G_{lam mu} for all lam, mu of n, via the character sum."""
    space = spec.space()
    table = character_table(n)
    parts = table.parts
    eig = {nu: twist_eigenvalue(spec, nu, space) for nu in parts}
    out = {}
    for a, lam in enumerate(parts):
        inv_z = Fraction(1, z_of(lam))
        for b, mu in enumerate(parts):
            total = space.zero()
            for c, nu in enumerate(parts):
                factor = table.chi[c][a] * table.chi[c][b]
                if factor:
                    total = total + eig[nu] * factor
            out[(lam, mu)] = total * inv_z
    return out


def apply_twist(spec: TwistSpec, v: CenterElement, space: SeriesSpace | None = None) -> CenterElement:
    """Multiply a center element by the twist: diagonal on idempotents,
    a linear combination on class sums; series-valued coordinates."""
    if space is None:
        space = spec.space()
    w = class_to_idem(v)
    coords = {
        lam: twist_eigenvalue(spec, lam, space) * c for lam, c in w.coords.items()
    }
    result = CenterElement(v.n, IDEMPOTENTS, coords)
    return result if v.basis == IDEMPOTENTS else idem_to_class(result)


# -- convolution coefficient families ----------------------------------------

@dataclass(frozen=True)
class QPow:
    """A series scaled by an exact (possibly negative) power of the sheet
    variable q; keeps q^{P_0} directions out of the truncation."""

    qexp: int
    series: TruncSeries

    def __mul__(self, other: "QPow") -> "QPow":
        return QPow(self.qexp + other.qexp, self.series * other.series)

    def inverse(self) -> "QPow":
        return QPow(-self.qexp, self.series.inverse())

    def __eq__(self, other):
        return (
            isinstance(other, QPow)
            and self.qexp == other.qexp
            and self.series == other.series
        )


class ConvolutionCoeffs:
    """Shared shape of the rho_j / r_j = rho_j/rho_{j-1} families and the
    shifted content product r_lam(N) = r_0(N) prod r_{N+j-i}."""

    def rho(self, j: int) -> QPow:
        raise NotImplementedError

    def r(self, j: int) -> QPow:
        raise NotImplementedError

    def one(self) -> QPow:
        raise NotImplementedError

    def r0(self, N: int) -> QPow:
        value = self.one()
        if N > 0:
            for j in range(N):
                value = value * self.rho(j)
        elif N < 0:
            for j in range(N, 0):
                value = value * self.rho(j).inverse()
        return value

    def r_lambda(self, lam: Partition, N: int) -> QPow:
        value = self.r0(N)
        for i, j in cells(lam):
            value = value * self.r(N + j - i)
        return value

    def check_ratio(self, j_lo: int, j_hi: int) -> None:
        """Assert r_j * rho_{j-1} = rho_j on a range of indices."""
        for j in range(j_lo, j_hi + 1):
            lhs = self.r(j) * self.rho(j - 1)
            assert lhs == self.rho(j), f"r_{j} * rho_{j-1} != rho_{j}"


class HTwistConvolution(ConvolutionCoeffs):
    """Image of a product of H(z_alpha) atoms (optionally scaled by q^{P_0})
    under the homomorphism to diagonal convolution coefficients:

        rho_j = q^j prod_alpha prod_{k=1}^{j} 1/(1 - k z_alpha)   (j > 0)
        rho_0 = 1
        rho_j = q^j prod_alpha prod_{k=j+1}^{0} (1 - k z_alpha)   (j < 0)
        r_j   = q prod_alpha 1/(1 - j z_alpha).
    """

    def __init__(self, z_params, space: SeriesSpace, scaled: bool = False):
        self.z_params = tuple(z_params)
        self.space = space
        self.scaled = scaled

    def one(self) -> QPow:
        return QPow(0, self.space.one())

    def _q(self, j: int) -> int:
        return j if self.scaled else 0

    def rho(self, j: int) -> QPow:
        series = self.space.one()
        if j > 0:
            for name in self.z_params:
                for k in range(1, j + 1):
                    series = series * self.space.geom(k, name)
        elif j < 0:
            for name in self.z_params:
                for k in range(j + 1, 1):
                    series = series * self.space.linear(-k, name)
        return QPow(self._q(j), series)

    def r(self, j: int) -> QPow:
        series = self.space.one()
        for name in self.z_params:
            series = series * self.space.geom(j, name)
        return QPow(self._q(1), series)


def intertwine(spec: TwistSpec) -> HTwistConvolution:
    """Convolution coefficients of a twist built from H atoms and at most
    one Scale atom (the A_P element e^{theta_0 P_0 + sum theta_i P_i})."""
    z_params = []
    scaled = False
    for f in spec.factors:
        if isinstance(f, H):
            z_params.append(f.param)
        elif isinstance(f, Scale):
            scaled = True
        else:
            raise ValueError(
                "intertwine expects a product of H atoms with an optional Scale"
            )
    return HTwistConvolution(z_params, spec.space(), scaled)


class NumericHConvolution(ConvolutionCoeffs):
    """H-family coefficients at rational z values; raises
    SingularParameterError when a touched factor 1 - k z vanishes."""

    def __init__(self, z_values, scale: Fraction = Fraction(1)):
        self.z_values = [Fraction(z) for z in z_values]
        self.scale = Fraction(scale)

    def one(self):
        return Fraction(1)

    def rho(self, j: int) -> Fraction:
        value = self.scale**j
        if j > 0:
            ks = range(1, j + 1)
            for z in self.z_values:
                for k in ks:
                    d = 1 - k * z
                    if d == 0:
                        raise SingularParameterError(
                            f"rho_{j} hits the pole 1 - {k}*z = 0 at z = {z}"
                        )
                    value /= d
        elif j < 0:
            for z in self.z_values:
                for k in range(j + 1, 1):
                    d = 1 - k * z
                    if d == 0:
                        raise SingularParameterError(
                            f"rho_{j} touches the zero 1 - {k}*z = 0 at z = {z}"
                        )
                    value *= d
        return value

    def r(self, j: int) -> Fraction:
        value = self.scale
        for z in self.z_values:
            d = 1 - j * z
            if d == 0:
                raise SingularParameterError(
                    f"r_{j} hits the pole 1 - {j}*z = 0 at z = {z}"
                )
            value /= d
        return value

    def r0(self, N: int) -> Fraction:
        value = Fraction(1)
        if N > 0:
            for j in range(N):
                value *= self.rho(j)
        elif N < 0:
            for j in range(N, 0):
                value /= self.rho(j)
        return value

    def r_lambda(self, lam: Partition, N: int) -> Fraction:
        value = self.r0(N)
        for i, j in cells(lam):
            value *= self.r(N + j - i)
        return value


class AlphaQConvolution(ConvolutionCoeffs):
    """Two-parameter family with a free exponent alpha (not a positive
    integer) and formal q:

        rho_j = q^j (1-alpha)_j / j!   (j >= 1),  rho_j = 1  (j <= 0)
        r_j   = q (j-alpha)/j          (j >= 1),  r_j   = 1  (j <= 0)

    and r_lam(N) = r_0(N) q^{|lam|} (N-alpha)_lam / (N)_lam for
    l(lam) <= N.
    """

    def __init__(self, alpha, space: SeriesSpace, q_param: str = "q"):
        alpha = Fraction(alpha)
        if alpha.denominator == 1 and alpha >= 1:
            raise ValueError("alpha must not be a positive integer")
        self.alpha = alpha
        self.space = space
        self.q = q_param

    def one(self) -> QPow:
        return QPow(0, self.space.one())

    def rho(self, j: int) -> QPow:
        if j <= 0:
            return self.one()
        coeff = pochhammer(1 - self.alpha, j) / factorial(j)
        return QPow(0, self.space.monomial(coeff, **{self.q: j}))

    def r(self, j: int) -> QPow:
        if j <= 0:
            return self.one()
        coeff = Fraction(j - self.alpha, j)
        return QPow(0, self.space.monomial(coeff, **{self.q: 1}))

    def closed_form_r_lambda(self, lam: Partition, N: int) -> QPow:
        """r_0(N) q^{|lam|} (N-alpha)_lam/(N)_lam via partition Pochhammers;
        only defined when (N)_lam != 0, i.e. l(lam) <= N."""
        lam = tuple(lam)
        if len(lam) > N:
            raise ZeroDivisionError(f"(N)_lam vanishes for {lam} at N = {N}")
        num = pochhammer_partition(N - self.alpha, lam)
        den = pochhammer_partition(N, lam)
        mono = self.space.monomial(num / den, **{self.q: size(lam)})
        return self.r0(N) * QPow(0, mono)


class ExpConvolution(ConvolutionCoeffs):
    """Exponential-kernel family behind the N x N trace-coupled integral:

        rho_j = (-N z)^j / j!   (j >= 0),   rho_j = 1   (j < 0).

    The branch product r_lam(N) carries the full prefactor
    (-N z)^{N(N-1)/2}; the Schur-expansion tables use the conventional
    normalisation schur_expansion_r_lambda = (-N z)^{|lam|} / ((prod_{k<N} k!) (N)_lam),
    with the two related by exactly that monomial factor.
    """

    def __init__(self, N: int, space: SeriesSpace, z_param: str = "z"):
        if N < 1:
            raise ValueError("N must be a positive integer")
        self.N = N
        self.space = space
        self.z = z_param

    def one(self) -> QPow:
        return QPow(0, self.space.one())

    def rho(self, j: int) -> QPow:
        if j < 0:
            return self.one()
        coeff = Fraction((-self.N) ** j, factorial(j))
        return QPow(0, self.space.monomial(coeff, **{self.z: j}))

    def r(self, j: int) -> QPow:
        if j <= 0:
            return self.one()
        return QPow(0, self.space.monomial(Fraction(-self.N, j), **{self.z: 1}))

    def vanishes(self, lam: Partition) -> bool:
        return len(tuple(lam)) > self.N

    def schur_expansion_r_lambda(self, lam: Partition) -> TruncSeries:
        """(-Nz)^{|lam|}/((prod k!)(N)_lam); zero when l(lam) > N (matching
        the vanishing of Schur functions in N variables)."""
        lam = tuple(lam)
        if self.vanishes(lam):
            return self.space.zero()
        norm = 1
        for k in range(self.N):
            norm *= factorial(k)
        den = pochhammer_partition(self.N, lam)
        coeff = Fraction((-self.N) ** size(lam)) / (norm * den)
        return self.space.monomial(coeff, **{self.z: size(lam)})


# -- eigenvalue families for tau assembly ------------------------------------

def okounkov_coeff(lam: Partition, space: SeriesSpace, q_param="q", beta_param="beta") -> TruncSeries:
    """q^{|lam|} e^{beta cont_lam} (the N=0 double-branch-point family)."""
    lam = tuple(lam)
    mono = space.monomial(1, **{q_param: size(lam)})
    return mono * space.exp_linear(content_sum(lam), beta_param)


def okounkov_exponents(lam: Partition, N: int) -> tuple[int, int]:
    """(q-exponent, beta-exponent) of r_lam(N) for rho_j = q^j e^{beta j(j+1)/2},
    r_j = q e^{j beta}, computed by integer exponent arithmetic."""
    lam = tuple(lam)
    if N < 0:
        raise ValueError("N must be nonnegative here")
    q_exp = N * (N - 1) // 2
    b_exp = sum(j * (j + 1) // 2 for j in range(N))
    for i, j in cells(lam):
        q_exp += 1
        b_exp += N + j - i
    return q_exp, b_exp


def multimonotone_coeff(lam: Partition, space: SeriesSpace, w_params, q_param="q") -> TruncSeries:
    """q^{|lam|} prod_alpha prod_{(i,j)} (1 + w_alpha (j-i))."""
    lam = tuple(lam)
    result = space.monomial(1, **{q_param: size(lam)})
    for name in w_params:
        for c in contents(lam):
            result = result * space.linear(c, name)
    return result


def alpha_q_coeff(lam: Partition, family: AlphaQConvolution, N: int) -> TruncSeries:
    """r_lam^{(alpha,q)}(N) as a q-series; defined-zero when l(lam) > N."""
    lam = tuple(lam)
    if len(lam) > N:
        return family.space.zero()
    value = family.closed_form_r_lambda(lam, N)
    assert value.qexp == 0
    return value.series


def family_coeffs(family: str, lam: Partition, N: int, space: SeriesSpace, **params):
    """Named coefficient families, dispatched by name.

    okounkov(q,beta): at N=0, q^{|lam|} e^{beta cont}; use okounkov_exponents
    for the exponent arithmetic at general N.  hciz_exp(z,N) and
    alpha_q(alpha,q,N) return the Schur-expansion coefficient, with the
    defined-zero convention for l(lam) > N; multimonotone(q,w_1..w_m)
    returns the segmented strict-monotone eigenvalue."""
    lam = tuple(lam)
    if family == "okounkov":
        if N != 0:
            raise ValueError("series form of the okounkov family is defined at N=0")
        return okounkov_coeff(lam, space, **params)
    if family == "hciz_exp":
        return ExpConvolution(N, space, **params).schur_expansion_r_lambda(lam)
    if family == "alpha_q":
        alpha = params.pop("alpha")
        return alpha_q_coeff(lam, AlphaQConvolution(alpha, space, **params), N)
    if family == "multimonotone":
        return multimonotone_coeff(lam, space, **params)
    raise ValueError(f"unknown family {family!r}")


def symmetry_check(coeffs: dict, n: int) -> bool:
    """Z_mu^{-1} G_{lam mu} = Z_lam^{-1} G_{mu lam} for all computed pairs."""
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            left = coeffs[(lam, mu)] * Fraction(1, z_of(mu))
            right = coeffs[(mu, lam)] * Fraction(1, z_of(lam))
            if left != right:
                return False
    return True
