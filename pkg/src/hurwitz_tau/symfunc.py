"""The ring of symmetric functions, truncated by degree.

Internally everything is stored on the power-sum basis ('p'); the Schur
basis ('s') is a view converted through the character table, so the two
Frobenius expansions

    S_lam = sum_mu chi_lam(mu) P_mu / Z_mu,
    P_mu  = sum_lam chi_lam(mu) S_lam,

are exact mutual inverses by construction.  Multiplication is partition
concatenation on the p-basis; terms above the degree cap are dropped and
the result is flagged as truncated.
"""

from fractions import Fraction

from .characters import character_table
from .partitions import (
    Partition,
    format_partition,
    partitions_of,
    z_of,
)

DEGREE_CAP_DEFAULT = 12


class SymFunc:
    """Sparse symmetric function: mapping partition -> coefficient."""

    __slots__ = ("basis", "terms", "degree_cap", "truncated")

    def __init__(self, basis, terms, degree_cap=DEGREE_CAP_DEFAULT, truncated=False):
        if basis not in ("p", "s"):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.degree_cap = degree_cap
        clean = {}
        dropped = False
        for lam, coeff in terms.items():
            coeff = Fraction(coeff)
            if not coeff:
                continue
            lam = tuple(lam)
            if sum(lam) > degree_cap:
                dropped = True
                continue
            clean[lam] = clean.get(lam, Fraction(0)) + coeff
        self.terms = {k: v for k, v in clean.items() if v}
        self.truncated = truncated or dropped

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        a = self if self.basis == "p" else to_powersum(self)
        b = other if other.basis == "p" else to_powersum(other)
        return a.terms == b.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam in sorted(self.terms, key=lambda t: (sum(t), t), reverse=True):
            bits.append(f"{self.terms[lam]}*{self.basis}[{format_partition(lam)}]")
        return " + ".join(bits)

    def __add__(self, other):
        a, b = _align(self, other)
        terms = dict(a.terms)
        for lam, c in b.terms.items():
            terms[lam] = terms.get(lam, Fraction(0)) + c
        return SymFunc(a.basis, terms, a.degree_cap, a.truncated or b.truncated)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "SymFunc":
        c = Fraction(c)
        return SymFunc(
            self.basis,
            {lam: coeff * c for lam, coeff in self.terms.items()},
            self.degree_cap,
            self.truncated,
        )

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_part(self, n: int) -> "SymFunc":
        return SymFunc(
            self.basis,
            {lam: c for lam, c in self.terms.items() if sum(lam) == n},
            self.degree_cap,
            self.truncated,
        )

    def as_json_dict(self) -> dict:
        rows = [
            {"part": format_partition(lam), "coeff": str(self.terms[lam])}
            for lam in sorted(self.terms, key=lambda t: (sum(t), [-p for p in t]))
        ]
        return {"basis": self.basis, "terms": rows}


def _align(a: SymFunc, b: SymFunc) -> tuple[SymFunc, SymFunc]:
    if a.basis == b.basis:
        return a, b
    return to_powersum(a), to_powersum(b)


def p_basis(terms, degree_cap=DEGREE_CAP_DEFAULT) -> SymFunc:
    return SymFunc("p", terms, degree_cap)


def s_basis(terms, degree_cap=DEGREE_CAP_DEFAULT) -> SymFunc:
    return SymFunc("s", terms, degree_cap)


def schur_to_powersum(lam: Partition, degree_cap=DEGREE_CAP_DEFAULT) -> SymFunc:
    """Expansion of a single Schur function on the power-sum basis."""
    lam = tuple(lam)
    n = sum(lam)
    table = character_table(n)
    terms = {
        mu: Fraction(table.value(lam, mu), z_of(mu)) for mu in table.parts
    }
    return SymFunc("p", terms, degree_cap)


def powersum_to_schur(mu: Partition, degree_cap=DEGREE_CAP_DEFAULT) -> SymFunc:
    """Expansion of a single power-sum monomial on the Schur basis."""
    mu = tuple(mu)
    n = sum(mu)
    table = character_table(n)
    terms = {lam: Fraction(table.value(lam, mu)) for lam in table.parts}
    return SymFunc("s", terms, degree_cap)


def to_powersum(f: SymFunc) -> SymFunc:
    if f.basis == "p":
        return f
    result = SymFunc("p", {}, f.degree_cap, f.truncated)
    for lam, coeff in f.terms.items():
        result = result + schur_to_powersum(lam, f.degree_cap).scale(coeff)
    return result


def to_schur(f: SymFunc) -> SymFunc:
    if f.basis == "s":
        return f
    result = SymFunc("s", {}, f.degree_cap, f.truncated)
    for mu, coeff in f.terms.items():
        result = result + powersum_to_schur(mu, f.degree_cap).scale(coeff)
    return result


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the ring; computed on the p-basis where it is monomial
    concatenation, then returned on the p-basis."""
    a, b = to_powersum(f), to_powersum(g)
    cap = min(a.degree_cap, b.degree_cap)
    terms: dict[Partition, Fraction] = {}
    truncated = a.truncated or b.truncated
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            if sum(lam) + sum(mu) > cap:
                truncated = True
                continue
            key = tuple(sorted(lam + mu, reverse=True))
            terms[key] = terms.get(key, Fraction(0)) + ca * cb
    return SymFunc("p", terms, cap, truncated)


def evaluate(f: SymFunc, xs) -> Fraction:
    """Evaluate at a finite list of values via p_k -> sum_a x_a^k."""
    xs = [Fraction(x) for x in xs]
    g = to_powersum(f)
    max_part = max((max(lam) for lam in g.terms if lam), default=0)
    power_sums = {}
    powers = [Fraction(1)] * len(xs)
    for k in range(1, max_part + 1):
        powers = [p * x for p, x in zip(powers, xs)]
        power_sums[k] = sum(powers, Fraction(0))
    total = Fraction(0)
    for lam, coeff in g.terms.items():
        value = coeff
        for part in lam:
            value *= power_sums[part]
        total += value
    return total


def evaluate_powersums(mu: Partition, xs) -> Fraction:
    """p_mu at the given values."""
    return evaluate(p_basis({tuple(mu): 1}), xs)


def evaluate_schur(lam: Partition, xs) -> Fraction:
    """S_lam at the given values, through the p-basis (production path)."""
    return evaluate(s_basis({tuple(lam): 1}), xs)


def cauchy_sides(n: int, xs, ys) -> tuple[Fraction, Fraction]:
    """Degree-n pieces of the Cauchy-Littlewood identity:

        sum_{|mu|=n} p_mu(x) p_mu(y) / Z_mu   and   sum_{|lam|=n} S_lam(x) S_lam(y).

    Both are returned so callers can assert equality; see
    cauchy_kernel_coeff for the product-side oracle.
    """
    power_side = sum(
        (
            evaluate_powersums(mu, xs) * evaluate_powersums(mu, ys) / z_of(mu)
            for mu in partitions_of(n)
        ),
        Fraction(0),
    )
    schur_side = sum(
        (
            evaluate_schur(lam, xs) * evaluate_schur(lam, ys)
            for lam in partitions_of(n)
        ),
        Fraction(0),
    )
    return power_side, schur_side


def cauchy_kernel_coeff(n: int, xs, ys) -> Fraction:
    """Degree-n coefficient of prod_{a,b} 1/(1 - x_a y_b), by direct
    geometric-series expansion in an auxiliary grading variable."""
    xs = [Fraction(x) for x in xs]
    ys = [Fraction(y) for y in ys]
    # coeffs[d] = degree-d coefficient of the partial product
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[0] = Fraction(1)
    for x in xs:
        for y in ys:
            factor = [Fraction(1)]
            for _ in range(n):
                factor.append(factor[-1] * x * y)
            new = [Fraction(0)] * (n + 1)
            for d, c in enumerate(coeffs):
                if not c:
                    continue
                for k in range(n + 1 - d):
                    new[d + k] += c * factor[k]
            coeffs = new
    return coeffs[n]


class TensorSymFunc:
    """Element of Lambda (x) Lambda on the p (x) p basis.

    terms maps a pair of partitions (lam, mu) to a coefficient, read as the
    coefficient of p_lam(x) * p_mu(y).  Coefficients may be Fractions or
    TruncSeries; the only requirements are +, * and truthiness.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = {k: v for k, v in terms.items() if v}

    def coeff(self, lam: Partition, mu: Partition):
        return self.terms.get((tuple(lam), tuple(mu)))

    def __eq__(self, other):
        return isinstance(other, TensorSymFunc) and self.terms == other.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for key, c in other.terms.items():
            if key in terms:
                merged = terms[key] + c
                if merged:
                    terms[key] = merged
                else:
                    del terms[key]
            else:
                terms[key] = c
        return TensorSymFunc(terms)

    def scale(self, c):
        return TensorSymFunc({k: v * c for k, v in self.terms.items()})

    def mul(self, other, grade_cap: int) -> "TensorSymFunc":
        """Bilinear product; p-monomials concatenate on each tensor leg.
        Terms whose x-degree exceeds grade_cap are dropped."""
        terms = {}
        for (la, ma), ca in self.terms.items():
            for (lb, mb), cb in other.terms.items():
                if sum(la) + sum(lb) > grade_cap:
                    continue
                key = (
                    tuple(sorted(la + lb, reverse=True)),
                    tuple(sorted(ma + mb, reverse=True)),
                )
                c = ca * cb
                if key in terms:
                    merged = terms[key] + c
                    if merged:
                        terms[key] = merged
                    else:
                        del terms[key]
                elif c:
                    terms[key] = c
        return TensorSymFunc(terms)

    def grade(self, n: int) -> "TensorSymFunc":
        return TensorSymFunc(
            {k: v for k, v in self.terms.items() if sum(k[0]) == n}
        )
