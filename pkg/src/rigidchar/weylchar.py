"""Reference oracles: Freudenthal character rows, the Weyl dimension
cross-check, tensor-product coefficients, and the Levi restriction check."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .charring import DictFamily, peel_decompose, product, saturated_dominants
from .errors import NotDominant, SupportFull, ZeroDenominator
from .rootsystem import (
    RootSystem,
    _assemble,
    add,
    dominance_leq,
    dominant_rep,
    desc_key,
    inner_product,
    is_dominant,
    root_to_weight,
    sub,
    to_root_coords,
)


class CharacterTable:
    """Lazily filled table of Freudenthal character rows for one system.

    The fill is idempotent per key, so concurrent duplicate computation is
    harmless.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._rows = {}

    def row(self, lam: tuple) -> dict:
        r = self._rows.get(lam)
        if r is None:
            r = freudenthal_char(self.rs, lam)
            self._rows[lam] = r
        return r


_TABLES = {}


def character_table(rs: RootSystem) -> CharacterTable:
    """Shared memoised table, keyed by the (interned) root system."""
    t = _TABLES.get(rs)
    if t is None:
        t = CharacterTable(rs)
        _TABLES[rs] = t
    return t


def freudenthal_char(rs: RootSystem, lam: tuple) -> dict:
    """Weight multiplicities of the highest-weight character by the
    Freudenthal recursion, as an orbit-sum-basis dict over the dominant
    saturated set."""
    if not is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    doms = saturated_dominants(rs, lam)
    dom_set = set(doms)
    rho = rs.rho
    lam_rho = add(lam, rho)
    c_top = inner_product(rs, lam_rho, lam_rho)
    # (v, alpha) = sum_j d_j * rc(alpha)_j * v_j for any weight v
    pos = []
    for alpha in rs.positive_roots:
        q = tuple(
            rs.half_norms[j] * alpha.coeffs[j] for j in range(rs.rank)
        )
        pos.append((root_to_weight(rs, alpha), q))
    m = {lam: 1}
    for mu in doms[1:]:
        total = Fraction(0)
        for alpha_w, q in pos:
            x = mu
            while True:
                x = add(x, alpha_w)
                dr = dominant_rep(rs, x)
                if dr not in dom_set:
                    break
                pairing = sum(q[j] * x[j] for j in range(rs.rank))
                total += pairing * m[dr]
        mu_rho = add(mu, rho)
        denom = c_top - inner_product(rs, mu_rho, mu_rho)
        if denom == 0:
            raise ZeroDenominator(f"vanishing denominator at {mu} below {lam}")
        val = 2 * total / denom
        if val.denominator != 1:
            raise ZeroDenominator(
                f"non-integral multiplicity {val} at {mu} below {lam}"
            )
        m[mu] = int(val)
    return m


def weyl_dimension(rs: RootSystem, lam: tuple) -> int:
    """Dimension by the Weyl product formula, exact rational arithmetic."""
    if not is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    num = Fraction(1)
    lam_rho = add(lam, rs.rho)
    for alpha in rs.positive_roots:
        num *= Fraction(
            inner_product(rs, lam_rho, alpha), inner_product(rs, rs.rho, alpha)
        )
    assert num.denominator == 1 and num > 0
    return int(num)


_TENSOR_CACHE = {}


def tensor_coeffs(rs: RootSystem, mu: tuple, nu: tuple) -> dict:
    """All multiplicities of the product of two highest-weight characters,
    by convolution followed by highest-weight peeling."""
    if not (is_dominant(mu) and is_dominant(nu)):
        raise NotDominant(f"{mu}, {nu} must be dominant")
    key = (rs, mu, nu) if mu <= nu else (rs, nu, mu)
    cached = _TENSOR_CACHE.get(key)
    if cached is not None:
        return dict(cached)
    table = character_table(rs)
    f = product(rs, table.row(mu), table.row(nu))
    out = peel_decompose(rs, f, table)
    _TENSOR_CACHE[key] = out
    return dict(out)


@dataclass(frozen=True)
class LeviSelector:
    """A nonempty proper subset of the Dynkin nodes (0-based indices)."""

    nodes: tuple

    def __post_init__(self):
        if not self.nodes:
            raise SupportFull("empty node set")


@lru_cache(maxsize=None)
def levi_subsystem(rs: RootSystem, nodes: tuple) -> RootSystem:
    """The root subsystem on a proper subset of Dynkin nodes.

    The bilinear form is inherited from the parent (not renormalised);
    every downstream formula is homogeneous in the form, so this is safe.
    """
    nodes = tuple(sorted(nodes))
    if not nodes or len(nodes) >= rs.rank:
        raise SupportFull(f"{nodes} is not a proper nonempty subset")
    cartan = [[rs.cartan[i][j] for j in nodes] for i in nodes]
    half_norms = tuple(rs.half_norms[i] for i in nodes)
    label = f"{rs.label}|{','.join(str(i + 1) for i in nodes)}"
    return _assemble(label, rs.series, len(nodes), cartan, half_norms)


def restrict_weight(lam: tuple, nodes: tuple) -> tuple:
    return tuple(lam[i] for i in sorted(nodes))


def levi_check(rs: RootSystem, lam: tuple, mu: tuple) -> bool:
    """Test that a multiplicity only depends on the subdiagram carrying
    the difference lam - mu.

    The difference must avoid at least one simple root; the multiplicity
    is recomputed inside the subsystem on the support nodes and compared
    with the full-system value.
    """
    if not dominance_leq(rs, mu, lam) or not is_dominant(mu):
        raise NotDominant(f"{mu} is not a dominant weight below {lam}")
    rc = to_root_coords(rs, sub(lam, mu))
    nodes = tuple(i for i, c in enumerate(rc.coeffs) if c > 0)
    if len(nodes) == rs.rank:
        raise SupportFull(f"{lam} - {mu} touches every simple root")
    if not nodes:
        return True  # both multiplicities are 1 by normalization
    sub_rs = levi_subsystem(rs, nodes)
    full = character_table(rs).row(lam).get(mu, 0)
    restricted = character_table(sub_rs).row(restrict_weight(lam, nodes))
    return restricted.get(restrict_weight(mu, nodes), 0) == full
