"""Truncated multivariate formal power series over exact rationals.

A SeriesSpace fixes the parameter names and their individual degree caps;
every TruncSeries belongs to one space and all arithmetic stays inside it,
silently dropping monomials whose exponent exceeds a cap (formal
truncation).  Coefficients are Fractions throughout.
"""

from fractions import Fraction

from .errors import ExactDivisionError

Exponents = tuple[int, ...]


class SeriesSpace:
    """Named formal parameters with per-parameter degree caps."""

    def __init__(self, params, caps):
        self.params = tuple(params)
        if isinstance(caps, int):
            caps = (caps,) * len(self.params)
        self.caps = tuple(int(c) for c in caps)
        if len(self.params) != len(self.caps):
            raise ValueError("one cap per parameter required")
        if len(set(self.params)) != len(self.params):
            raise ValueError(f"parameter names must be distinct: {self.params}")
        self._index = {name: k for k, name in enumerate(self.params)}

    def __repr__(self):
        inside = ", ".join(f"{p}<= {c}" for p, c in zip(self.params, self.caps))
        return f"SeriesSpace({inside})"

    def __eq__(self, other):
        return (
            isinstance(other, SeriesSpace)
            and self.params == other.params
            and self.caps == other.caps
        )

    def __hash__(self):
        return hash((self.params, self.caps))

    def axis(self, name: str) -> int:
        return self._index[name]

    def exponents(self, **powers) -> Exponents:
        exps = [0] * len(self.params)
        for name, e in powers.items():
            exps[self._index[name]] = e
        return tuple(exps)

    # -- constructors ------------------------------------------------------

    def zero(self) -> "TruncSeries":
        return TruncSeries(self, {})

    def scalar(self, c) -> "TruncSeries":
        return TruncSeries(self, {(0,) * len(self.params): Fraction(c)})

    def one(self) -> "TruncSeries":
        return self.scalar(1)

    def monomial(self, coeff, **powers) -> "TruncSeries":
        return TruncSeries(self, {self.exponents(**powers): Fraction(coeff)})

    def gen(self, name: str) -> "TruncSeries":
        return self.monomial(1, **{name: 1})

    def geom(self, c, name: str) -> "TruncSeries":
        """1/(1 - c*x) = sum_k c^k x^k up to the cap of x."""
        c = Fraction(c)
        axis = self.axis(name)
        terms = {}
        power = Fraction(1)
        for k in range(self.caps[axis] + 1):
            if power:
                exps = [0] * len(self.params)
                exps[axis] = k
                terms[tuple(exps)] = power
            power *= c
        return TruncSeries(self, terms)

    def linear(self, c, name: str) -> "TruncSeries":
        """1 + c*x."""
        return self.one() + self.monomial(c, **{name: 1})

    def exp_linear(self, c, name: str) -> "TruncSeries":
        """exp(c*x) = sum_k c^k x^k / k! up to the cap of x."""
        c = Fraction(c)
        axis = self.axis(name)
        terms = {}
        coeff = Fraction(1)
        for k in range(self.caps[axis] + 1):
            if coeff:
                exps = [0] * len(self.params)
                exps[axis] = k
                terms[tuple(exps)] = coeff
            coeff = coeff * c / (k + 1)
        return TruncSeries(self, terms)


class TruncSeries:
    __slots__ = ("space", "terms")

    def __init__(self, space: SeriesSpace, terms: dict):
        self.space = space
        caps = space.caps
        clean = {}
        for exps, coeff in terms.items():
            if not coeff:
                continue
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if all(e <= c for e, c in zip(exps, caps)):
                clean[exps] = coeff
        self.terms = clean

    # -- inspection --------------------------------------------------------

    def coeff(self, **powers) -> Fraction:
        return self.terms.get(self.space.exponents(**powers), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.space.params), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            if self.space.params != other.space.params:
                return NotImplemented
            return self.terms == other.terms
        # scalar comparison
        value = Fraction(other)
        if not value:
            return not self.terms
        return self.terms == {(0,) * len(self.space.params): value}

    def __hash__(self):
        return hash((self.space.params, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms):
            mono = monomial_label(self.space.params, exps)
            bits.append(f"{self.terms[exps]}*{mono}" if mono != "1" else str(self.terms[exps]))
        return " + ".join(bits)

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "TruncSeries"):
        if self.space != other.space:
            raise ValueError(
                f"series spaces differ: {self.space} vs {other.space}"
            )

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            other = self.space.scalar(other)
        self._check(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            merged = terms.get(exps, 0) + coeff
            if merged:
                terms[exps] = merged
            else:
                terms.pop(exps, None)
        return TruncSeries(self.space, terms)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.space, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            other = self.space.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.space.scalar(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            c = Fraction(other)
            if not c:
                return self.space.zero()
            return TruncSeries(
                self.space, {e: coeff * c for e, coeff in self.terms.items()}
            )
        self._check(other)
        caps = self.space.caps
        terms: dict[Exponents, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                if any(e > cap for e, cap in zip(exps, caps)):
                    continue
                merged = terms.get(exps, 0) + ca * cb
                if merged:
                    terms[exps] = merged
                else:
                    terms.pop(exps, None)
        return TruncSeries(self.space, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        return self * (1 / Fraction(other))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.space.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; requires an invertible constant term."""
        c0 = self.constant_term()
        if not c0:
            raise ExactDivisionError("series has no constant term; not a unit")
        # self = c0 (1 + v) with v truncation-nilpotent.
        v = self * (1 / c0) - 1
        bound = sum(self.space.caps) + 1
        result = self.space.one()
        power = self.space.one()
        for _ in range(bound):
            power = power * (-v)
            if power.is_zero():
                break
            result = result + power
        return result * (1 / c0)

    # -- univariate helpers (used by determinant code) ----------------------

    def valuation(self, name: str) -> int:
        """Smallest exponent of the named parameter over all terms."""
        if not self.terms:
            raise ValueError("valuation of the zero series is undefined")
        axis = self.space.axis(name)
        return min(e[axis] for e in self.terms)

    def shift_down(self, name: str, amount: int) -> "TruncSeries":
        """Exact division by x^amount; every term must be divisible."""
        axis = self.space.axis(name)
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[axis] < amount:
                raise ExactDivisionError(
                    f"term {exps} not divisible by {name}^{amount}"
                )
            new = list(exps)
            new[axis] -= amount
            terms[tuple(new)] = coeff
        return TruncSeries(self.space, terms)

    def divide_exact(self, other: "TruncSeries", name: str) -> "TruncSeries":
        """Division self/other in the truncated ring, allowing other to have
        positive valuation in the named parameter.

        Precision above cap - valuation(other) is lost to truncation; callers
        are expected to build with enough guard degrees.
        """
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero series")
        if self.is_zero():
            return self.space.zero()
        v = other.valuation(name)
        if v == 0:
            return self * other.inverse()
        return self.shift_down(name, v) * other.shift_down(name, v).inverse()

    def truncate_to(self, space: SeriesSpace) -> "TruncSeries":
        """Reinterpret in a space with the same parameters but smaller caps."""
        if space.params != self.space.params:
            raise ValueError("truncate_to needs identical parameter names")
        return TruncSeries(space, dict(self.terms))


def monomial_label(params, exps) -> str:
    """Human-readable monomial key, e.g. "z^3" or "q^2 w^1"; "1" if constant."""
    bits = [f"{p}^{e}" for p, e in zip(params, exps) if e]
    return " ".join(bits) if bits else "1"


def series_exp(u: TruncSeries) -> TruncSeries:
    """exp of a series with zero constant term (finite in the truncation)."""
    if u.constant_term():
        raise ValueError("series_exp needs a zero constant term")
    result = u.space.one()
    power = u.space.one()
    k = 0
    bound = sum(u.space.caps) + 1
    while k < bound:
        k += 1
        power = power * u * Fraction(1, k)
        if power.is_zero():
            break
        result = result + power
    return result


def series_log(u: TruncSeries) -> TruncSeries:
    """log of a series with constant term 1."""
    if u.constant_term() != 1:
        raise ValueError("series_log needs constant term 1")
    v = u - 1
    result = u.space.zero()
    power = u.space.one()
    sign = 1
    bound = sum(u.space.caps) + 1
    for k in range(1, bound + 1):
        power = power * v
        if power.is_zero():
            break
        result = result + power * Fraction(sign, k)
        sign = -sign
    return result
