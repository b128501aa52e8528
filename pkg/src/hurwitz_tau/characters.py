"""Irreducible characters of the symmetric groups.

Single values come from a recursive border-strip (Murnaghan-Nakayama)
evaluation, memoized on (shape, remaining cycle lengths); full tables are
built once per n and cached.  Orthogonality makes the tables
self-checking: see CharacterTable.validate().

Everything is a pure function of its arguments; the memo caches only ever
publish finished values, so concurrent callers read identical results.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .config import CHARTABLE_CAP
from .errors import SizeLimitError
from .partitions import (
    Partition,
    dimension,
    format_partition,
    partitions_of,
    z_of,
)

_mn_cache: dict[tuple[Partition, tuple[int, ...]], int] = {}


def border_strip_removals(lam: Partition, r: int):
    """Yield (shape, sign) for every removal of a border strip of size r.

    Uses beta-numbers: strips of size r correspond to first-column hook
    lengths b with b - r >= 0 not already occupied; the sign is (-1) to the
    number of rows the strip spans minus one.
    """
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    occupied = set(beta)
    for b in beta:
        c = b - r
        if c < 0 or c in occupied:
            continue
        crossed = sum(1 for x in beta if c < x < b)
        new_beta = sorted((occupied - {b}) | {c}, reverse=True)
        shape = tuple(
            p for k, nb in enumerate(new_beta) if (p := nb - (ell - 1 - k)) > 0
        )
        yield shape, (-1) ** crossed


def _mn(lam: Partition, mu_suffix: tuple[int, ...]) -> int:
    if not mu_suffix:
        return 1 if not lam else 0
    key = (lam, mu_suffix)
    cached = _mn_cache.get(key)
    if cached is not None:
        return cached
    r, rest = mu_suffix[0], mu_suffix[1:]
    total = 0
    for shape, sign in border_strip_removals(lam, r):
        total += sign * _mn(shape, rest)
    _mn_cache[key] = total
    return total


def character(lam: Partition, mu: Partition) -> int:
    """Character value chi_lam(mu) for partitions of the same n."""
    if sum(lam) != sum(mu):
        raise ValueError(
            f"character needs |lam| = |mu|, got {lam} and {mu}"
        )
    # Largest remaining cycle length is consumed first (mu is canonical,
    # i.e. weakly decreasing), which keeps the memo keys deterministic.
    return _mn(lam, tuple(sorted(mu, reverse=True)))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    parts: tuple[Partition, ...]
    chi: tuple[tuple[int, ...], ...]  # chi[row lam][col mu]

    def index(self, lam: Partition) -> int:
        return self.parts.index(tuple(lam))

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.chi[self.index(lam)][self.index(mu)]

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.chi[self.index(lam)]

    def validate(self) -> None:
        """Check both orthogonality relations and the dimension column."""
        parts = self.parts
        for a, mu in enumerate(parts):
            for b, nu in enumerate(parts):
                dot = sum(row[a] * row[b] for row in self.chi)
                expected = z_of(mu) if a == b else 0
                assert dot == expected, (
                    f"column orthogonality fails at n={self.n}, {mu}, {nu}"
                )
        for a, lam in enumerate(parts):
            for b, kap in enumerate(parts):
                dot = sum(
                    Fraction(self.chi[a][m] * self.chi[b][m], z_of(mu))
                    for m, mu in enumerate(parts)
                )
                expected = 1 if a == b else 0
                assert dot == expected, (
                    f"row orthogonality fails at n={self.n}, {lam}, {kap}"
                )
        identity_col = parts.index((1,) * self.n)
        for a, lam in enumerate(parts):
            assert self.chi[a][identity_col] == dimension(lam), (
                f"dimension column fails at n={self.n}, {lam}"
            )

    def as_json_dict(self) -> dict:
        return {
            "n": self.n,
            "order": [format_partition(p) for p in self.parts],
            "chi": [list(row) for row in self.chi],
        }


@lru_cache(maxsize=None)
def character_table(n: int, cap: int = CHARTABLE_CAP) -> CharacterTable:
    if n > cap:
        raise SizeLimitError(f"character_table({n}) exceeds the cap {cap}")
    parts = partitions_of(n)
    chi = tuple(
        tuple(character(lam, mu) for mu in parts) for lam in parts
    )
    table = CharacterTable(n=n, parts=parts, chi=chi)
    table.validate()
    return table


def chi_over_z_matrix(n: int) -> list[list[Fraction]]:
    """Rows lam, columns mu: chi_lam(mu)/Z_mu (handy for basis changes)."""
    table = character_table(n)
    return [
        [Fraction(value, z_of(mu)) for value, mu in zip(row, table.parts)]
        for row in table.chi
    ]
