"""Explicit computation in the symmetric group algebra C[S_n].

Permutations are tuples of images on {1..n} (images[i-1] = image of i),
composed apply-right-first: (g*h)(x) = g(h(x)).  Walks in the Cayley graph
generated by transpositions are counted by brute force: a memo-free forward
dynamic program over (current permutation, last maximum-entry used) for the
monotone constraint families, and full enumeration with a per-factorization
union-find check when transitivity is required.  These counts are the
independent oracle against which the character-sum coefficients are tested.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _all_perms

from . import config
from .errors import CentralityError, SizeLimitError
from .partitions import Partition, check_partition, class_size

Perm = tuple[int, ...]


# -- permutations ----------------------------------------------------------

def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(g: Perm, h: Perm) -> Perm:
    """(g*h)(x) = g(h(x)); h acts first."""
    return tuple(g[h[x] - 1] for x in range(len(g)))


def inverse(g: Perm) -> Perm:
    inv = [0] * len(g)
    for x, y in enumerate(g, start=1):
        inv[y - 1] = x
    return tuple(inv)


def cycles(g: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(g)
    out = []
    for start in range(1, len(g) + 1):
        if seen[start - 1]:
            continue
        cyc = []
        x = start
        while not seen[x - 1]:
            seen[x - 1] = True
            cyc.append(x)
            x = g[x - 1]
        out.append(tuple(cyc))
    return out


def cycle_type(g: Perm) -> Partition:
    return tuple(sorted((len(c) for c in cycles(g)), reverse=True))


def transposition(n: int, a: int, b: int) -> Perm:
    images = list(range(1, n + 1))
    images[a - 1], images[b - 1] = b, a
    return tuple(images)


@lru_cache(maxsize=None)
def transpositions(n: int) -> tuple[tuple[int, int, Perm], ...]:
    """All (a, b, perm) with a < b."""
    return tuple(
        (a, b, transposition(n, a, b))
        for b in range(2, n + 1)
        for a in range(1, b)
    )


def class_representative(mu: Partition, n: int | None = None) -> Perm:
    """Cycles laid out consecutively on 1..n, largest part first."""
    mu = tuple(mu)
    if n is None:
        n = sum(mu)
    elif sum(mu) != n:
        raise ValueError(f"{mu} is not a partition of {n}")
    images = list(range(1, n + 1))
    start = 1
    for part in mu:
        for offset in range(part):
            images[start - 1 + offset] = start + ((offset + 1) % part)
        start += part
    return tuple(images)


@lru_cache(maxsize=None)
def conjugacy_classes(n: int) -> dict[Partition, tuple[Perm, ...]]:
    """All of S_n grouped by cycle type (n <= hard walk cap)."""
    if n > config.WALK_CAP_HARD:
        raise SizeLimitError(f"refusing to enumerate S_{n}")
    grouped: dict[Partition, list[Perm]] = {}
    for images in _all_perms(range(1, n + 1)):
        grouped.setdefault(cycle_type(images), []).append(images)
    return {mu: tuple(members) for mu, members in grouped.items()}


# -- sparse group algebra ----------------------------------------------------

class GroupAlgebraElement:
    """Sparse map permutation -> Fraction, supported in one S_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Perm, Fraction]):
        self.n = n
        self.terms = {g: c for g, c in terms.items() if c}

    @classmethod
    def zero(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, {})

    @classmethod
    def unit(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, {identity(n): Fraction(1)})

    @classmethod
    def from_perm(cls, g: Perm) -> "GroupAlgebraElement":
        return cls(len(g), {tuple(g): Fraction(1)})

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"mixed group sizes {self.n} and {other.n}")

    def __eq__(self, other):
        return (
            isinstance(other, GroupAlgebraElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for g, c in other.terms.items():
            merged = terms.get(g, Fraction(0)) + c
            if merged:
                terms[g] = merged
            else:
                terms.pop(g, None)
        return GroupAlgebraElement(self.n, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "GroupAlgebraElement":
        c = Fraction(c)
        return GroupAlgebraElement(
            self.n, {g: coeff * c for g, coeff in self.terms.items()}
        )

    def __mul__(self, other):
        """Convolution product; right factor acts first."""
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        self._check(other)
        terms: dict[Perm, Fraction] = {}
        for g, cg in self.terms.items():
            for h, ch in other.terms.items():
                key = compose(g, h)
                merged = terms.get(key, Fraction(0)) + cg * ch
                if merged:
                    terms[key] = merged
                else:
                    terms.pop(key, None)
        return GroupAlgebraElement(self.n, terms)

    def __pow__(self, k: int):
        result = GroupAlgebraElement.unit(self.n)
        for _ in range(k):
            result = result * self
        return result

    def coeff(self, g: Perm) -> Fraction:
        return self.terms.get(tuple(g), Fraction(0))

    def support_size(self) -> int:
        return len(self.terms)

    def commutes_with(self, other) -> bool:
        return self * other == other * self

    def class_coordinates(self) -> dict[Partition, Fraction]:
        """Coordinates on the class-sum basis; raises CentralityError when
        the element is not constant on conjugacy classes."""
        first_seen: dict[Partition, tuple[Perm, Fraction]] = {}
        coverage: dict[Partition, int] = {}
        for g, c in self.terms.items():
            t = cycle_type(g)
            coverage[t] = coverage.get(t, 0) + 1
            if t in first_seen:
                g0, c0 = first_seen[t]
                if c0 != c:
                    raise CentralityError(g0, c0, g, c)
            else:
                first_seen[t] = (g, c)
        coords = {}
        for t, (g0, c0) in first_seen.items():
            # Partial support of a class means non-central (missing => 0).
            if coverage[t] != class_size(t):
                missing = next(
                    h for h in conjugacy_classes(self.n)[t] if h not in self.terms
                )
                raise CentralityError(g0, c0, missing, Fraction(0))
            coords[t] = c0
        return coords


def class_sum(n: int, mu) -> GroupAlgebraElement:
    """Sum of all permutations of cycle type mu, each with coefficient 1."""
    mu = check_partition(mu)
    if sum(mu) != n:
        raise ValueError(f"{mu} is not a partition of {n}")
    members = conjugacy_classes(n).get(mu, ())
    return GroupAlgebraElement(n, {g: Fraction(1) for g in members})


def jm_element(n: int, b: int) -> GroupAlgebraElement:
    """Jucys-Murphy element J_b = sum_{a<b} (a b); J_1 = 0."""
    if not 1 <= b <= n:
        raise ValueError(f"b must lie in 1..{n}, got {b}")
    return GroupAlgebraElement(
        n, {transposition(n, a, b): Fraction(1) for a in range(1, b)}
    )


def jm_power_sum(n: int, i: int) -> GroupAlgebraElement:
    """P_i(J) = sum_b J_b^i for i >= 1; P_0(J) = n * Id."""
    if i < 0:
        raise ValueError("power must be nonnegative")
    if i == 0:
        return GroupAlgebraElement.unit(n).scale(n)
    total = GroupAlgebraElement.zero(n)
    for b in range(1, n + 1):
        total = total + jm_element(n, b) ** i
    return total


# -- walk counting -----------------------------------------------------------

PLAIN, WEAK, STRICT = "plain", "weak", "strict"


@dataclass(frozen=True)
class Segment:
    kind: str
    length: int

    def __post_init__(self):
        if self.kind not in (PLAIN, WEAK, STRICT):
            raise ValueError(f"unknown segment kind {self.kind!r}")
        if self.length < 0:
            raise ValueError("segment length must be >= 0")


def plain(k: int) -> tuple[Segment, ...]:
    return (Segment(PLAIN, k),)


def weakly_monotone(k: int) -> tuple[Segment, ...]:
    return (Segment(WEAK, k),)


def strictly_monotone(k: int) -> tuple[Segment, ...]:
    return (Segment(STRICT, k),)


def mixed(p: int, k: int) -> tuple[Segment, ...]:
    """k steps total: the first p weakly monotone, the rest unconstrained."""
    if p > k:
        raise ValueError("mixed needs p <= k")
    return (Segment(WEAK, p), Segment(PLAIN, k - p))


def multi_monotone(lengths) -> tuple[Segment, ...]:
    """Consecutive strictly monotone segments; no constraint across edges."""
    return tuple(Segment(STRICT, d) for d in lengths)


def weak_then_strict(k: int, l: int) -> tuple[Segment, ...]:
    return (Segment(WEAK, k), Segment(STRICT, l))


@dataclass(frozen=True)
class WalkQuery:
    n: int
    from_type: Partition
    to_type: Partition
    segments: tuple[Segment, ...]
    transitive: bool = False

    def __post_init__(self):
        object.__setattr__(self, "from_type", check_partition(self.from_type))
        object.__setattr__(self, "to_type", check_partition(self.to_type))
        object.__setattr__(self, "segments", tuple(self.segments))
        if sum(self.from_type) != self.n or sum(self.to_type) != self.n:
            raise ValueError("from/to cycle types must be partitions of n")

    @property
    def steps(self) -> int:
        return sum(seg.length for seg in self.segments)


def count_walks(query: WalkQuery, cap: int | None = None) -> int:
    """Number of tuples (g, t_1, ..., t_k): g has cycle type from_type,
    t_k ... t_1 g equals the fixed representative of to_type, each t is a
    transposition (a b) with a < b, and within each constraint segment the
    b-sequence (in application order t_1 first) is weakly/strictly
    increasing as requested.  With transitive=True the subgroup generated
    by g and all the t's must act transitively on {1..n}."""
    counts = count_walks_all_targets(
        query.n, query.from_type, query.segments, query.transitive, cap
    )
    return counts.get(query.to_type, 0)


def count_walks_all_targets(
    n: int,
    from_type,
    segments: tuple[Segment, ...],
    transitive: bool = False,
    cap: int | None = None,
) -> dict[Partition, int]:
    """Batch walk counts from one start class to every target class."""
    from_type = check_partition(from_type)
    if sum(from_type) != n:
        raise ValueError(f"{from_type} is not a partition of {n}")
    if cap is None:
        cap = config.walk_cap()
    if n > min(cap, config.WALK_CAP_HARD):
        raise SizeLimitError(f"walk counting capped at n <= {cap}, got {n}")
    segments = tuple(seg for seg in segments if seg.length > 0)
    if transitive:
        return _count_transitive(n, from_type, segments)
    return _count_dp(n, from_type, segments)


def count_walks_to_elements(
    n: int, from_type, segments: tuple[Segment, ...], cap: int | None = None
) -> dict[Perm, int]:
    """Walk counts from the start class to every individual end permutation
    (used to confirm independence of the representative choice)."""
    from_type = check_partition(from_type)
    if cap is None:
        cap = config.walk_cap()
    if n > min(cap, config.WALK_CAP_HARD):
        raise SizeLimitError(f"walk counting capped at n <= {cap}, got {n}")
    segments = tuple(seg for seg in segments if seg.length > 0)
    taus = transpositions(n)
    dist = {(g, 0): 1 for g in conjugacy_classes(n)[from_type]}
    for seg in segments:
        dist = {(g, 0): c for (g, _), c in _merge(dist).items()}
        for _ in range(seg.length):
            new: dict[tuple[Perm, int], int] = {}
            for (g, floor), cnt in dist.items():
                for _, b, tau in taus:
                    if seg.kind == WEAK and b < floor:
                        continue
                    if seg.kind == STRICT and b <= floor:
                        continue
                    key = (compose(tau, g), b if seg.kind != PLAIN else 0)
                    new[key] = new.get(key, 0) + cnt
            dist = new
    return {g: c for (g, _), c in _merge(dist).items()}


def _count_dp(n, from_type, segments) -> dict[Partition, int]:
    totals = count_walks_to_elements(n, from_type, segments, cap=config.WALK_CAP_HARD)
    out: dict[Partition, int] = {}
    for mu in conjugacy_classes(n):
        c = totals.get(class_representative(mu, n), 0)
        if c:
            out[mu] = c
    return out


def _merge(dist) -> dict[tuple[Perm, int], int]:
    merged: dict[tuple[Perm, int], int] = {}
    for (g, _), c in dist.items():
        key = (g, 0)
        merged[key] = merged.get(key, 0) + c
    return merged


def _count_transitive(n, from_type, segments) -> dict[Partition, int]:
    # Enumerate every admissible transposition sequence once, tallied by
    # (product permutation, set partition of {1..n} generated by the pairs);
    # then sweep the start class and finish the union-find with g's cycles.
    buckets: dict[Perm, dict[tuple, int]] = {}
    taus = transpositions(n)

    def blocks_key(parent):
        groups: dict[int, list[int]] = {}
        for x in range(1, n + 1):
            groups.setdefault(_find(parent, x), []).append(x)
        return tuple(tuple(g) for g in sorted(groups.values()))

    def rec(seg_idx, pos, floor, prod, parent):
        if seg_idx == len(segments):
            per_perm = buckets.setdefault(prod, {})
            key = blocks_key(parent)
            per_perm[key] = per_perm.get(key, 0) + 1
            return
        seg = segments[seg_idx]
        if pos == seg.length:
            rec(seg_idx + 1, 0, 0, prod, parent)
            return
        for a, b, tau in taus:
            if seg.kind == WEAK and b < floor:
                continue
            if seg.kind == STRICT and b <= floor:
                continue
            new_parent = dict(parent)
            _union(new_parent, a, b)
            rec(
                seg_idx,
                pos + 1,
                b if seg.kind != PLAIN else 0,
                compose(tau, prod),
                new_parent,
            )

    rec(0, 0, 0, identity(n), {x: x for x in range(1, n + 1)})

    out: dict[Partition, int] = {}
    classes = conjugacy_classes(n)
    for mu in classes:
        rep = class_representative(mu, n)
        total = 0
        for g in classes[from_type]:
            needed = compose(rep, inverse(g))
            per_perm = buckets.get(needed)
            if not per_perm:
                continue
            for key, cnt in per_perm.items():
                parent = {x: x for x in range(1, n + 1)}
                for block in key:
                    for other in block[1:]:
                        _union(parent, block[0], other)
                for cyc in cycles(g):
                    for other in cyc[1:]:
                        _union(parent, cyc[0], other)
                roots = {_find(parent, x) for x in range(1, n + 1)}
                if len(roots) == 1:
                    total += cnt
        if total:
            out[mu] = total
    return out


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union(parent, a, b):
    ra, rb = _find(parent, a), _find(parent, b)
    if ra != rb:
        parent[rb] = ra


def transposition_class_matrix(n: int) -> dict[Partition, dict[Partition, int]]:
    """M[mu][nu] = number of transpositions t with t * rep(mu) of type nu.

    Class-vector DP oracle: plain k-step counts satisfy
    D(lam, mu; k) = |C_lam| * (e_lam M^k)[mu] / |C_mu|.
    """
    out: dict[Partition, dict[Partition, int]] = {}
    for mu in conjugacy_classes(n):
        rep = class_representative(mu, n)
        row: dict[Partition, int] = {}
        for _, _, tau in transpositions(n):
            t = cycle_type(compose(tau, rep))
            row[t] = row.get(t, 0) + 1
        out[mu] = row
    return out


def plain_count_via_class_dp(n: int, lam, mu, k: int) -> Fraction:
    """Independent class-basis dynamic program for plain k-step counts."""
    lam, mu = check_partition(lam), check_partition(mu)
    matrix = transposition_class_matrix(n)
    vec: dict[Partition, int] = {lam: 1}
    for _ in range(k):
        new: dict[Partition, int] = {}
        for t, c in vec.items():
            for u, m in matrix[t].items():
                new[u] = new.get(u, 0) + c * m
        vec = new
    walks_to_class = vec.get(mu, 0)
    return Fraction(class_size(lam) * walks_to_class, class_size(mu))
