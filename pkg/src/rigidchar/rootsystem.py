"""Root-system combinatorics for the classical series A, B, C and D.

Weights are plain tuples of integers in fundamental-weight coordinates.
Root-lattice vectors are wrapped in :class:`RootVector` and carry exact
rational coefficients in the simple-root basis.  All arithmetic is exact;
no floating point appears anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DimensionMismatch, NotDominant, RankOutOfRange

Weight = tuple  # tuple[int, ...] in fundamental-weight coordinates

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


@dataclass(frozen=True)
class LieType:
    """A classical series letter together with a rank."""

    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _MIN_RANK:
            raise RankOutOfRange(f"unknown series {self.series!r}")
        if self.rank < _MIN_RANK[self.series]:
            raise RankOutOfRange(
                f"{self.series}_{self.rank}: series {self.series} needs "
                f"rank >= {_MIN_RANK[self.series]}"
            )

    @property
    def proof_caveat(self) -> bool:
        """True for C_2, where the reconstruction's case analysis has a known gap."""
        return self.series == "C" and self.rank == 2


@dataclass(frozen=True)
class RootVector:
    """Exact rational coefficients in the simple-root basis."""

    coeffs: tuple

    def __len__(self):
        return len(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in map(Fraction, self.coeffs))

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def int_coeffs(self) -> tuple:
        if not self.is_integral():
            raise ValueError(f"non-integral root vector {self.coeffs}")
        return tuple(int(c) for c in self.coeffs)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable root-system data; construct via :func:`build_root_system`.

    ``cartan[i][j]`` is the pairing of the j-th simple root against the
    coroot of the i-th one.  ``half_norms[i]`` is half the squared length
    of the i-th simple root, normalised so long roots have squared length 2.
    """

    label: str
    series: str
    rank: int
    cartan: tuple          # rank x rank, ints
    half_norms: tuple      # Fractions d_i
    cartan_inv: tuple      # rank x rank, Fractions
    simple_root_fund: tuple  # fund coords of each simple root (columns of cartan)
    positive_roots: tuple  # RootVector, integer coefficients
    rho: tuple             # all-ones weight
    rho_pair: tuple        # Fractions (omega_j, rho)
    lie_type: LieType = None


def _cartan_matrix(series: str, l: int):
    a = [[2 if i == j else 0 for j in range(l)] for i in range(l)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if series == "D":
        for i in range(l - 3):
            link(i, i + 1)
        link(l - 3, l - 2)
        link(l - 3, l - 1)
        return a
    for i in range(l - 1):
        link(i, i + 1)
    # a[i][j] pairs alpha_j against the coroot of alpha_i
    if series == "B" and l >= 2:
        a[l - 1][l - 2] = -2   # last root short
    if series == "C" and l >= 2:
        a[l - 2][l - 1] = -2   # last root long
    return a


def _half_norms(series: str, l: int):
    one = Fraction(1)
    half = Fraction(1, 2)
    if series == "B":
        return tuple([one] * (l - 1) + [half])
    if series == "C":
        return tuple([half] * (l - 1) + [one])
    return tuple([one] * l)


def _invert(matrix):
    """Exact inverse by Gauss-Jordan over the rationals."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)]
           + [Fraction(1 if j == i else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _generate_positive_roots(cartan):
    """All positive roots, as integer root-coordinate tuples.

    Every root lies in the reflection orbit of some simple root, so a
    breadth-first closure of the simple roots under simple reflections
    produces the whole root system; the positive ones are those with
    nonnegative coordinates.
    """
    l = len(cartan)
    seen = set()
    frontier = [tuple(1 if j == i else 0 for j in range(l)) for i in range(l)]
    seen.update(frontier)
    while frontier:
        nxt = []
        for beta in frontier:
            # fundamental coordinate i of beta is sum_j beta_j * cartan[i][j]
            for i in range(l):
                pairing = sum(beta[j] * cartan[i][j] for j in range(l))
                if pairing == 0:
                    continue
                refl = tuple(
                    beta[j] - (pairing if j == i else 0) for j in range(l)
                )
                if refl not in seen:
                    seen.add(refl)
                    nxt.append(refl)
        frontier = nxt
    pos = [b for b in seen if all(c >= 0 for c in b)]
    pos.sort(key=lambda b: (sum(b), b))
    return tuple(pos)


@lru_cache(maxsize=None)
def _build(series: str, rank: int) -> RootSystem:
    t = LieType(series, rank)
    cartan = _cartan_matrix(series, rank)
    half_norms = _half_norms(series, rank)
    return _assemble(f"{series}{rank}", series, rank, cartan, half_norms, t)


def _assemble(label, series, rank, cartan, half_norms, lie_type=None) -> RootSystem:
    cartan_t = tuple(tuple(row) for row in cartan)
    inv = _invert(cartan)
    cols = tuple(
        tuple(cartan[i][j] for i in range(rank)) for j in range(rank)
    )
    pos = tuple(
        RootVector(tuple(Fraction(c) for c in b))
        for b in _generate_positive_roots(cartan)
    )
    rho = (1,) * rank
    rho_pair = tuple(
        sum(half_norms[k] * inv[k][j] for k in range(rank)) for j in range(rank)
    )
    return RootSystem(
        label=label, series=series, rank=rank, cartan=cartan_t,
        half_norms=half_norms, cartan_inv=inv, simple_root_fund=cols,
        positive_roots=pos, rho=rho, rho_pair=rho_pair, lie_type=lie_type,
    )


def build_root_system(t: LieType) -> RootSystem:
    """Root system for a classical type; instances are interned per type."""
    return _build(t.series, t.rank)


def root_system(series: str, rank: int) -> RootSystem:
    return _build(series, rank)


def _check_len(rs: RootSystem, v):
    if len(v) != rs.rank:
        raise DimensionMismatch(
            f"expected length {rs.rank}, got {len(v)}: {v!r}"
        )


def is_dominant(w: Weight) -> bool:
    return all(c >= 0 for c in w)


def _require_dominant(w: Weight):
    if not is_dominant(w):
        raise NotDominant(f"{w} is not dominant")


def add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def fundamental(rs: RootSystem, i: int) -> Weight:
    """The i-th fundamental weight (0-based index)."""
    return tuple(1 if j == i else 0 for j in range(rs.rank))


def to_root_coords(rs: RootSystem, delta: Weight) -> RootVector:
    """Solve delta = sum c_j alpha_j exactly via the inverse Cartan matrix."""
    _check_len(rs, delta)
    inv = rs.cartan_inv
    return RootVector(tuple(
        sum(inv[i][j] * delta[j] for j in range(rs.rank))
        for i in range(rs.rank)
    ))


def root_to_weight(rs: RootSystem, rv: RootVector) -> Weight:
    """Fundamental coordinates of a root-lattice vector (must be integral)."""
    _check_len(rs, rv.coeffs)
    vals = [
        sum(rv.coeffs[j] * rs.cartan[i][j] for j in range(rs.rank))
        for i in range(rs.rank)
    ]
    out = tuple(Fraction(v) for v in vals)
    if any(v.denominator != 1 for v in out):
        raise ValueError(f"{rv} has non-integral fundamental coordinates")
    return tuple(int(v) for v in out)


def inner_product(rs: RootSystem, a, b) -> Fraction:
    """The W-invariant symmetric bilinear form, long roots of squared length 2.

    Either argument may be a weight (fundamental coordinates) or a
    :class:`RootVector` (simple-root coordinates).
    """
    ra = a.coeffs if isinstance(a, RootVector) else to_root_coords(rs, a).coeffs
    if isinstance(b, RootVector):
        _check_len(rs, b.coeffs)
        fb = [
            sum(Fraction(b.coeffs[j]) * rs.cartan[i][j] for j in range(rs.rank))
            for i in range(rs.rank)
        ]
    else:
        _check_len(rs, b)
        fb = b
    return sum(
        Fraction(ra[i]) * rs.half_norms[i] * fb[i] for i in range(rs.rank)
    )


def rho_height(rs: RootSystem, w: Weight) -> Fraction:
    """(w, rho); strictly monotone along both dominance and the refined order."""
    return sum(
        w[j] * rs.rho_pair[j] for j in range(rs.rank)
    ) if any(w) else Fraction(0)


def desc_key(rs: RootSystem):
    """Sort key: (.,rho) descending, ties lexicographic on coordinates."""
    return lambda w: (-rho_height(rs, w), w)


def reflect(rs: RootSystem, w: Weight, i: int) -> Weight:
    """Simple reflection at node i (0-based)."""
    wi = w[i]
    if wi == 0:
        return w
    col = rs.simple_root_fund[i]
    return tuple(w[k] - wi * col[k] for k in range(rs.rank))


def dominant_rep(rs: RootSystem, w: Weight) -> Weight:
    """The unique dominant weight in the Weyl orbit of w."""
    _check_len(rs, w)
    cur = tuple(w)
    while True:
        for i, c in enumerate(cur):
            if c < 0:
                cur = reflect(rs, cur, i)
                break
        else:
            return cur


def minus_w0(rs: RootSystem, lam: Weight) -> Weight:
    """-w0(lam) for dominant lam; an involution permuting the fundamentals."""
    _require_dominant(lam)
    return dominant_rep(rs, tuple(-c for c in lam))


@lru_cache(maxsize=None)
def _orbit(rs_id, rs: RootSystem, lam: Weight):
    frontier = [lam]
    seen = {lam}
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(rs.rank):
                r = reflect(rs, w, i)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return frozenset(seen)


def weyl_orbit(rs: RootSystem, lam: Weight) -> frozenset:
    """The full Weyl orbit of a dominant weight."""
    _check_len(rs, lam)
    _require_dominant(lam)
    return _orbit(id(rs), rs, lam)


def dominance_leq(rs: RootSystem, mu: Weight, lam: Weight) -> bool:
    """True iff lam - mu is a nonnegative integer combination of simple roots."""
    rv = to_root_coords(rs, sub(lam, mu))
    return rv.is_integral() and rv.is_nonnegative()


def order_less(rs: RootSystem, mu: Weight, lam: Weight) -> bool:
    """The refined strict order: dominance, or dominant difference."""
    _require_dominant(mu)
    _require_dominant(lam)
    if mu == lam:
        return False
    return dominance_leq(rs, mu, lam) or is_dominant(sub(lam, mu))


def dominants_below(rs: RootSystem, lam: Weight):
    """All dominant mu with lam - mu a nonnegative integer root combination.

    Enumerated over the box of possible root coordinates (the inverse
    Cartan matrix is entrywise nonnegative, so the coordinates of
    lam - mu are bounded by those of lam).  Unsorted.
    """
    _require_dominant(lam)
    bounds = [int(c) for c in to_root_coords(rs, lam).coeffs]
    out = []
    cartan = rs.cartan
    rank = rs.rank
    for k in itertools.product(*(range(b + 1) for b in bounds)):
        mu = tuple(
            lam[i] - sum(cartan[i][j] * k[j] for j in range(rank))
            for i in range(rank)
        )
        if all(c >= 0 for c in mu):
            out.append(mu)
    return out


def is_minimal(rs: RootSystem, lam: Weight) -> bool:
    """True iff lam is the only dominant weight below itself (minuscule-like)."""
    _require_dominant(lam)
    return len(dominants_below(rs, lam)) == 1
