"""The center of C[S_n]: class-sum and orthogonal-idempotent bases.

The two bases are related through the character table,

    C_mu  = (1/Z_mu) sum_lam h_lam chi_lam(mu) F_lam,
    F_lam = (1/h_lam) sum_mu  chi_lam(mu) C_mu,

and multiplication is diagonal on the idempotent side (F_lam F_lam =
F_lam, F_lam F_nu = 0).  Coordinates may be Fractions or TruncSeries; the
basis changes only ever scale by rationals, so both work unchanged.

The characteristic map sends C_mu to P_mu/Z_mu and F_lam to S_lam/h_lam;
it identifies the center with the homogeneous degree-n symmetric
functions, which is what connects walk counts to symmetric-function
identities downstream.
"""

from dataclasses import dataclass
from fractions import Fraction

from .characters import character_table
from .groupalg import GroupAlgebraElement, class_sum
from .partitions import Partition, hook_product, partitions_of, z_of
from .symfunc import SymFunc, p_basis, s_basis

CLASS_SUMS = "C"
IDEMPOTENTS = "F"


@dataclass(frozen=True)
class CenterElement:
    n: int
    basis: str
    coords: dict  # Partition -> Fraction | TruncSeries

    def __post_init__(self):
        if self.basis not in (CLASS_SUMS, IDEMPOTENTS):
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.coords.items():
            lam = tuple(lam)
            if sum(lam) != self.n:
                raise ValueError(f"{lam} is not a partition of {self.n}")
            if c:
                clean[lam] = c
        object.__setattr__(self, "coords", clean)

    def coeff(self, lam: Partition):
        return self.coords.get(tuple(lam), Fraction(0))

    def map_coords(self, fn) -> "CenterElement":
        return CenterElement(self.n, self.basis, {k: fn(v) for k, v in self.coords.items()})

    def __add__(self, other: "CenterElement") -> "CenterElement":
        if (self.n, self.basis) != (other.n, other.basis):
            raise ValueError("mismatched center elements")
        coords = dict(self.coords)
        for k, v in other.coords.items():
            coords[k] = (coords[k] + v) if k in coords else v
        return CenterElement(self.n, self.basis, coords)


def unit_class(n: int, mu) -> CenterElement:
    return CenterElement(n, CLASS_SUMS, {tuple(mu): Fraction(1)})


def unit_idempotent(n: int, lam) -> CenterElement:
    return CenterElement(n, IDEMPOTENTS, {tuple(lam): Fraction(1)})


def class_to_idem(v: CenterElement) -> CenterElement:
    """Rewrite class-sum coordinates on the idempotent basis."""
    if v.basis == IDEMPOTENTS:
        return v
    table = character_table(v.n)
    coords = {}
    for mu, c in v.coords.items():
        zc = Fraction(1, z_of(mu))
        for lam in table.parts:
            chi = table.value(lam, mu)
            if not chi:
                continue
            weight = Fraction(hook_product(lam) * chi) * zc
            if lam in coords:
                coords[lam] = coords[lam] + c * weight
            else:
                coords[lam] = c * weight
    return CenterElement(v.n, IDEMPOTENTS, coords)


def idem_to_class(v: CenterElement) -> CenterElement:
    """Rewrite idempotent coordinates on the class-sum basis."""
    if v.basis == CLASS_SUMS:
        return v
    table = character_table(v.n)
    coords = {}
    for lam, c in v.coords.items():
        h = Fraction(1, hook_product(lam))
        for mu in table.parts:
            chi = table.value(lam, mu)
            if not chi:
                continue
            weight = Fraction(chi) * h
            if mu in coords:
                coords[mu] = coords[mu] + c * weight
            else:
                coords[mu] = c * weight
    return CenterElement(v.n, CLASS_SUMS, coords)


def center_multiply(u: CenterElement, v: CenterElement) -> CenterElement:
    """Product in the center, computed diagonally on the idempotent basis;
    returned on the basis of the first argument."""
    if u.n != v.n:
        raise ValueError("mismatched group sizes")
    a, b = class_to_idem(u), class_to_idem(v)
    coords = {}
    for lam, ca in a.coords.items():
        cb = b.coords.get(lam)
        if cb:
            coords[lam] = ca * cb
    product = CenterElement(u.n, IDEMPOTENTS, coords)
    return product if u.basis == IDEMPOTENTS else idem_to_class(product)


def characteristic_map(v: CenterElement, degree_cap: int | None = None) -> SymFunc:
    """C_mu -> P_mu/Z_mu on the class basis, F_lam -> S_lam/h_lam on the
    idempotent basis; the two agree through the basis change."""
    cap = degree_cap if degree_cap is not None else max(v.n, 1)
    if v.basis == CLASS_SUMS:
        return p_basis(
            {mu: Fraction(c, 1) / z_of(mu) for mu, c in v.coords.items()}, cap
        )
    return s_basis(
        {lam: Fraction(c, 1) / hook_product(lam) for lam, c in v.coords.items()}, cap
    )


def group_algebra_of(v: CenterElement) -> GroupAlgebraElement:
    """Expand into the full group algebra (exponential size; oracle use)."""
    w = idem_to_class(v)
    total = GroupAlgebraElement.zero(v.n)
    for mu, c in w.coords.items():
        total = total + class_sum(v.n, mu).scale(c)
    return total


def project_to_classes(a: GroupAlgebraElement) -> CenterElement:
    """Read off class-sum coordinates of a central element (CentralityError
    with a witness pair otherwise)."""
    return CenterElement(a.n, CLASS_SUMS, a.class_coordinates())


def class_structure_constants(n: int) -> dict[tuple[Partition, Partition], dict[Partition, Fraction]]:
    """Structure constants of the class-sum basis from raw convolution in
    C[S_n]; exponential in n, used as the independent multiplication oracle."""
    out = {}
    parts = partitions_of(n)
    sums = {mu: class_sum(n, mu) for mu in parts}
    for mu in parts:
        for nu in parts:
            out[(mu, nu)] = (sums[mu] * sums[nu]).class_coordinates()
    return out


# -- differential operators on the symmetric-function side -------------------

def euler_operator(f: SymFunc) -> SymFunc:
    """sum_k k p_k d/dp_k: multiplies a degree-n homogeneous term by n."""
    g = f if f.basis == "p" else _to_p(f)
    return p_basis(
        {lam: c * sum(lam) for lam, c in g.terms.items()}, g.degree_cap
    )


def cut_and_join_operator(f: SymFunc) -> SymFunc:
    """(1/2) sum_{i,j>=1} ((i+j) p_i p_j d/dp_{i+j} + i j p_{i+j} d^2/(dp_i dp_j)).

    On the image of the characteristic map this is multiplication by the
    transposition class sum.
    """
    g = f if f.basis == "p" else _to_p(f)
    out: dict[Partition, Fraction] = {}

    def add(lam, c):
        if not c:
            return
        key = tuple(sorted(lam, reverse=True))
        out[key] = out.get(key, Fraction(0)) + c

    for lam, coeff in g.terms.items():
        mult: dict[int, int] = {}
        for part in lam:
            mult[part] = mult.get(part, 0) + 1
        # cut: (i+j) p_i p_j d/dp_{i+j}, i+j running over parts of lam
        for v, m in mult.items():
            removed = _remove(lam, (v,))
            for i in range(1, v):
                j = v - i
                add(removed + (i, j), coeff * m * v * Fraction(1, 2))
        # join: i j p_{i+j} d^2/(dp_i dp_j)
        for i, mi in mult.items():
            for j, mj in mult.items():
                if i == j:
                    ways = mi * (mi - 1)
                    if not ways:
                        continue
                    removed = _remove(lam, (i, i))
                else:
                    ways = mi * mj
                    removed = _remove(lam, (i, j))
                add(removed + (i + j,), coeff * ways * i * j * Fraction(1, 2))
    return p_basis(out, g.degree_cap)


def _remove(lam: Partition, parts) -> Partition:
    rest = list(lam)
    for p in parts:
        rest.remove(p)
    return tuple(rest)


def _to_p(f: SymFunc) -> SymFunc:
    from .symfunc import to_powersum

    return to_powersum(f)
