"""Hypergeometric-type double series and their cross-checks.

A TauSeries is the double expansion

    tau = sum_{n <= n_max} sum_{|lam|=|mu|=n} c(lam,mu) p_lam(x) p_mu(y),
    c(lam,mu) = Z_mu^{-1} G_{lam mu} = sum_nu r_nu chi_nu(lam) chi_nu(mu) / (Z_lam Z_mu),

equivalently sum_nu r_nu S_nu(x) S_nu(y), for a content-product coefficient
family r.  Walk generating tables read D(lam,mu) = Z_mu * c(lam,mu); the
formal logarithm of tau produces the connected (transitive) counts in the
same normalisation.

Determinantal cross-checks evaluate the same series at numeric points via
exact N x N determinants over truncated series (fraction-free Bareiss
elimination with exact division).
"""

from fractions import Fraction
from math import factorial

from .characters import character_table
from .errors import VandermondeError
from .partitions import (
    Partition,
    partitions_of,
    z_of,
)
from .series import SeriesSpace, TruncSeries
from .symfunc import TensorSymFunc, evaluate_powersums, evaluate_schur
from .twists import (
    AlphaQConvolution,
    E,
    Exp,
    ExpConvolution,
    H,
    Scale,
    alpha_q_coeff,
    multimonotone_coeff,
    okounkov_coeff,
    twist,
    twist_eigenvalue,
)

TAU_NMAX_CAP = 8


class TauSeries:
    """Double power-sum expansion of a diagonal double Schur series.

    The constant (n = 0) term equals the family's empty-partition
    coefficient: 1 for the unshifted twist families (vacuum, okounkov,
    monotone, strict, multimonotone), and the normalisation r_0(N) for the
    N-shifted convolution families (hciz, alpha_q).  log_tau requires the
    former.
    """

    def __init__(self, space: SeriesSpace, n_max: int, r_of):
        if n_max > TAU_NMAX_CAP:
            raise ValueError(f"n_max capped at {TAU_NMAX_CAP}")
        self.space = space
        self.n_max = n_max
        self.r = {}
        terms = {}
        for n in range(n_max + 1):
            table = character_table(n)
            parts = table.parts
            r_vals = [r_of(nu) for nu in parts]
            for nu, r in zip(parts, r_vals):
                self.r[nu] = r
            for a, lam in enumerate(parts):
                for b, mu in enumerate(parts):
                    total = space.zero()
                    for c in range(len(parts)):
                        weight = table.chi[c][a] * table.chi[c][b]
                        if weight:
                            total = total + r_vals[c] * weight
                    total = total * Fraction(1, z_of(lam) * z_of(mu))
                    if total:
                        terms[(lam, mu)] = total
        self.tensor = TensorSymFunc(terms)

    def coeff(self, lam, mu) -> TruncSeries:
        """Coefficient of p_lam(x) p_mu(y), i.e. Z_mu^{-1} G_{lam mu}."""
        value = self.tensor.coeff(lam, mu)
        return value if value is not None else self.space.zero()

    def walk_generating_value(self, lam, mu) -> TruncSeries:
        """D(lam, mu) = G_{lam mu}: fixed-end-representative walk counts."""
        return self.coeff(lam, mu) * z_of(tuple(mu))

    def schur_coefficient(self, nu) -> TruncSeries:
        return self.r[tuple(nu)]


# -- named families -----------------------------------------------------------

def vacuum_tau(n_max: int) -> TauSeries:
    """All r_nu = 1: the degree-n slices of the Cauchy-Littlewood kernel."""
    space = SeriesSpace((), ())
    return TauSeries(space, n_max, lambda nu: space.one())


def okounkov_tau(n_max: int, beta_cap: int) -> TauSeries:
    space = SeriesSpace(("q", "beta"), (n_max, beta_cap))
    return TauSeries(space, n_max, lambda nu: okounkov_coeff(nu, space))


def monotone_tau(n_max: int, z_cap: int) -> TauSeries:
    """Weakly monotone walks: Scale(q) * H(z) eigenvalues."""
    spec = twist((Scale("q"), H("z")), (n_max, z_cap))
    space = spec.space()
    return TauSeries(space, n_max, lambda nu: twist_eigenvalue(spec, nu, space))


def strict_tau(n_max: int, w_cap: int) -> TauSeries:
    spec = twist((Scale("q"), E("w")), (n_max, w_cap))
    space = spec.space()
    return TauSeries(space, n_max, lambda nu: twist_eigenvalue(spec, nu, space))


def mixed_tau(n_max: int, z_cap: int, beta_cap: int) -> TauSeries:
    spec = twist((Exp("q", "beta"), H("z")), (n_max, beta_cap, z_cap))
    space = spec.space()
    return TauSeries(space, n_max, lambda nu: twist_eigenvalue(spec, nu, space))


def weak_strict_tau(n_max: int, z_cap: int, w_cap: int) -> TauSeries:
    spec = twist((Scale("q"), H("z"), E("w")), (n_max, z_cap, w_cap))
    space = spec.space()
    return TauSeries(space, n_max, lambda nu: twist_eigenvalue(spec, nu, space))


def multimonotone_tau(n_max: int, w_caps: dict) -> TauSeries:
    """Strictly monotone segments, one w parameter per segment."""
    names = tuple(w_caps)
    space = SeriesSpace(("q",) + names, (n_max,) + tuple(w_caps[k] for k in names))
    return TauSeries(
        space, n_max, lambda nu: multimonotone_coeff(nu, space, names)
    )


def hciz_tau(N: int, n_max: int, z_cap: int | None = None) -> TauSeries:
    if z_cap is None:
        z_cap = n_max
    space = SeriesSpace(("z",), (z_cap,))
    family = ExpConvolution(N, space)
    return TauSeries(space, n_max, family.schur_expansion_r_lambda)


def alpha_q_tau(alpha, N: int, n_max: int, q_cap: int | None = None) -> TauSeries:
    if q_cap is None:
        q_cap = n_max + N * (N - 1) // 2
    space = SeriesSpace(("q",), (q_cap,))
    family = AlphaQConvolution(alpha, space)
    return TauSeries(space, n_max, lambda nu: alpha_q_coeff(nu, family, N))


# -- evaluation ---------------------------------------------------------------

def tau_eval(t: TauSeries, a_vals, b_vals) -> TruncSeries:
    """Specialise x -> a, y -> b; returns a series in the family parameters."""
    total = t.space.zero()
    p_cache_a: dict[Partition, Fraction] = {}
    p_cache_b: dict[Partition, Fraction] = {}
    for (lam, mu), series in t.tensor.terms.items():
        pa = p_cache_a.get(lam)
        if pa is None:
            pa = p_cache_a[lam] = evaluate_powersums(lam, a_vals)
        pb = p_cache_b.get(mu)
        if pb is None:
            pb = p_cache_b[mu] = evaluate_powersums(mu, b_vals)
        weight = pa * pb
        if weight:
            total = total + series * weight
    return total


def tau_eval_schur_side(t: TauSeries, a_vals, b_vals) -> TruncSeries:
    """Same evaluation through sum_nu r_nu S_nu(a) S_nu(b); the agreement of
    the two routes is the twisted Cauchy-Littlewood identity at a point."""
    total = t.space.zero()
    for nu, r in t.r.items():
        weight = evaluate_schur(nu, a_vals) * evaluate_schur(nu, b_vals)
        if weight:
            total = total + r * weight
    return total


# -- formal logarithm: connected counts ---------------------------------------

def tensor_one() -> TensorSymFunc:
    return TensorSymFunc({((), ()): Fraction(1)})


def log_tau(t: TauSeries) -> TensorSymFunc:
    """Formal log of the double series in its sheet grading.

    The (lam, mu) coefficient of the result, times Z_mu, is the connected
    (transitive) walk count in the same convention as
    walk_generating_value."""
    const = t.tensor.coeff((), ())
    if const is None or const != t.space.one():
        raise ValueError("log_tau needs constant term 1")
    u = TensorSymFunc(
        {k: v for k, v in t.tensor.terms.items() if k != ((), ())}
    )
    result = TensorSymFunc({})
    power = tensor_one()
    sign = 1
    for k in range(1, t.n_max + 1):
        power = power.mul(u, t.n_max)
        if not power.terms:
            break
        result = result + power.scale(Fraction(sign, k))
        sign = -sign
    return result


def exp_tensor(f: TensorSymFunc, n_max: int) -> TensorSymFunc:
    """Inverse of log_tau on formal tensor series without constant term."""
    result = tensor_one()
    power = tensor_one()
    for k in range(1, n_max + 1):
        power = power.mul(f, n_max)
        if not power.terms:
            break
        result = result + power.scale(Fraction(1, factorial(k)))
    return result


# -- determinants over truncated series ----------------------------------------

def bareiss_determinant(rows: list[list[TruncSeries]], name: str) -> TruncSeries:
    """Fraction-free (Bareiss) determinant over the truncated-series ring;
    divisions are exact by construction and checked by the division routine.
    The named parameter controls valuation-aware division."""
    size_n = len(rows)
    m = [list(r) for r in rows]
    if size_n == 0:
        raise ValueError("empty matrix")
    space = m[0][0].space
    prev = space.one()
    for k in range(size_n - 1):
        pivot = m[k][k]
        if pivot.is_zero():
            swap = next(
                (r for r in range(k + 1, size_n) if not m[r][k].is_zero()), None
            )
            if swap is None:
                return space.zero()
            m[k], m[swap] = m[swap], m[k]
            # a row swap flips the sign; fold it into the swapped-in row
            m[k] = [entry * Fraction(-1) for entry in m[k]]
            pivot = m[k][k]
        for i in range(k + 1, size_n):
            for j in range(k + 1, size_n):
                numerator = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = numerator.divide_exact(prev, name)
        prev = pivot
    return m[size_n - 1][size_n - 1]


def vandermonde(values) -> Fraction:
    """prod_{i<j} (a_i - a_j); raises when values repeat."""
    values = [Fraction(v) for v in values]
    det = Fraction(1)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            d = values[i] - values[j]
            if d == 0:
                raise VandermondeError(f"repeated evaluation point {values[i]}")
            det *= d
    return det


def hciz_determinant(N: int, a_vals, b_vals, z_cap: int) -> TruncSeries:
    """Exact determinant route to the exponential-kernel series:

        det(e^{-N z a_i b_j}) / (Delta(a) Delta(b) (-N z)^{N(N-1)/2})
            = sum_{l(lam)<=N} r_lam S_lam(a) S_lam(b).

    The determinant vanishes to order N(N-1)/2 in z; dividing that monomial
    out exactly is part of the contract (the classical normalisation making
    the series start at 1).
    """
    a_vals = [Fraction(x) for x in a_vals]
    b_vals = [Fraction(x) for x in b_vals]
    if len(a_vals) != N or len(b_vals) != N:
        raise ValueError("need exactly N evaluation points on each side")
    shift = N * (N - 1) // 2
    guard = SeriesSpace(("z",), (z_cap + shift,))
    rows = [
        [guard.exp_linear(-N * ai * bj, "z") for bj in b_vals] for ai in a_vals
    ]
    det = bareiss_determinant(rows, "z")
    det = det / (vandermonde(a_vals) * vandermonde(b_vals))
    if shift:
        for exps, coeff in det.terms.items():
            if exps[0] < shift and coeff:
                raise ArithmeticError(
                    "determinant does not vanish to the expected order"
                )
        det = det.shift_down("z", shift) * Fraction(1, (-N) ** shift)
    target = SeriesSpace(("z",), (z_cap,))
    return det.truncate_to(target)


def alpha_q_determinant(N: int, alpha, a_vals, b_vals, q_cap: int) -> dict:
    """Entrywise-power determinant comparison (exploratory).

    Evaluates det((1 - q a_i b_j)^{alpha-1}) / (Delta(a) Delta(b)) with the
    power read entrywise as a binomial series in q, and compares against the
    Schur-expansion evaluation of the alpha-q family at the same points.
    Reports match/mismatch instead of asserting; the alternative reading
    (det M)^{alpha-1} is also examined structurally.
    """
    alpha = Fraction(alpha)
    a_vals = [Fraction(x) for x in a_vals]
    b_vals = [Fraction(x) for x in b_vals]
    if len(a_vals) != N or len(b_vals) != N:
        raise ValueError("need exactly N evaluation points on each side")
    work = SeriesSpace(("q",), (q_cap + N,))

    def entry(ai, bj):
        # (1 - q ai bj)^(alpha-1) as a binomial series in q
        term = Fraction(1)
        total = work.zero()
        for k in range(work.caps[0] + 1):
            total = total + work.monomial(term, q=k)
            term = term * (alpha - 1 - k) * (-ai * bj) / (k + 1)
        return total

    rows = [[entry(ai, bj) for bj in b_vals] for ai in a_vals]
    det = bareiss_determinant(rows, "q")
    det = det / (vandermonde(a_vals) * vandermonde(b_vals))

    n_max = min(q_cap, TAU_NMAX_CAP)
    tau = alpha_q_tau(alpha, N, n_max, q_cap + N)
    schur_side = tau_eval(tau, a_vals, b_vals)

    target = SeriesSpace(("q",), (min(q_cap, n_max),))
    det_t = det.truncate_to(target)
    schur_t = schur_side.truncate_to(target)
    det_constant = det.constant_term()
    return {
        "N": N,
        "alpha": str(alpha),
        "a": [str(x) for x in a_vals],
        "b": [str(x) for x in b_vals],
        "q_cap": target.caps[0],
        "entrywise_matches_schur_expansion": det_t == schur_t,
        "entrywise_determinant": _series_table(det_t),
        "schur_expansion": _series_table(schur_t),
        "det_power_reading_defined": N == 1 or det_constant != 0,
        "notes": (
            "the whole-determinant reading (det M)^(alpha-1) needs an"
            " invertible constant term, but det(1 - q a_i b_j) has constant"
            " term det(all ones) = 0 for N >= 2, so only the entrywise"
            " reading defines a formal series there"
            if N >= 2
            else "for N = 1 both readings coincide with the binomial series"
        ),
    }


def _series_table(series: TruncSeries) -> dict[str, str]:
    from .series import monomial_label

    return {
        monomial_label(series.space.params, exps): str(coeff)
        for exps, coeff in sorted(series.terms.items())
    }


# -- walk-count tables ---------------------------------------------------------

TABLE_KINDS = ("plain", "monotone", "strict", "mixed", "multi")


def hurwitz_table(kind: str, n_max: int, step_cap: int, connected: bool = False) -> list[dict]:
    """Walk-count table rows, one per (n, from, to, step data).

    Counts are D(lam, mu): walks from any element of the start class to the
    fixed representative of the end class.  Disconnected counts come from
    the twist coefficients; connected ones from the formal logarithm (and
    are validated against the transitive oracle by the verify suite).
    """
    from math import factorial as _f

    from .partitions import format_partition

    if kind == "plain":
        tau = okounkov_tau(n_max, step_cap)
        steps = [({"b": b}, lambda c, n, b=b: c.coeff(q=n, beta=b) * _f(b))
                 for b in range(step_cap + 1)]
    elif kind == "monotone":
        tau = monotone_tau(n_max, step_cap)
        steps = [({"k": k}, lambda c, n, k=k: c.coeff(q=n, z=k))
                 for k in range(step_cap + 1)]
    elif kind == "strict":
        tau = strict_tau(n_max, step_cap)
        steps = [({"k": k}, lambda c, n, k=k: c.coeff(q=n, w=k))
                 for k in range(step_cap + 1)]
    elif kind == "mixed":
        tau = mixed_tau(n_max, step_cap, step_cap)
        steps = [
            ({"p": p, "k": k}, lambda c, n, p=p, j=k - p: c.coeff(q=n, z=p, beta=j) * _f(j))
            for k in range(step_cap + 1)
            for p in range(k + 1)
        ]
    elif kind == "multi":
        tau = multimonotone_tau(n_max, {"w1": step_cap, "w2": step_cap})
        steps = [
            ({"segments": [d1, d2]}, lambda c, n, d1=d1, d2=d2: c.coeff(q=n, w1=d1, w2=d2))
            for total in range(step_cap + 1)
            for d1 in range(total + 1)
            for d2 in (total - d1,)
        ]
    else:
        raise ValueError(f"unknown table kind {kind!r}")

    source = log_tau(tau) if connected else tau.tensor
    rows = []
    for n in range(1, n_max + 1):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                series = source.coeff(lam, mu)
                for step_data, extract in steps:
                    if series is None:
                        value = Fraction(0)
                    else:
                        value = extract(series, n) * z_of(mu)
                    assert value.denominator == 1, (lam, mu, step_data, value)
                    rows.append(
                        {
                            "n": n,
                            "from": format_partition(lam),
                            "to": format_partition(mu),
                            "steps": step_data,
                            "count": str(value.numerator),
                            "connected": connected,
                        }
                    )
    return rows
