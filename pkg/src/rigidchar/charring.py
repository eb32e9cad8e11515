"""The Weyl-invariant character ring.

Invariant elements are stored in the orbit-sum basis as plain dicts
mapping dominant weights to nonzero integer coefficients; full
exponential-basis expansions are dicts over arbitrary weights.  Products
expand to the exponential basis, convolve exactly, and re-collect on
dominant representatives.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import MissingFamilyRow, NotDominant
from .rootsystem import (
    RootSystem,
    add,
    desc_key,
    dominant_rep,
    dominants_below,
    is_dominant,
    weyl_orbit,
)

# WInvariant: dict[Weight, int] with dominant keys and no stored zeros.
# EExpansion: dict[Weight, int], constant on Weyl orbits.


def h_invariant(rs: RootSystem, entries) -> dict:
    """Validate and normalize an orbit-sum-basis element."""
    out = {}
    for mu, c in entries.items():
        if not is_dominant(mu):
            raise NotDominant(f"key {mu} is not dominant")
        if c:
            out[mu] = c
    return out


def saturated_dominants(rs: RootSystem, lam: tuple):
    """The dominant part of the saturated set of lam, sorted by falling (.,rho).

    These are the dominant weights mu with lam - mu a nonnegative integer
    combination of simple roots; lam itself comes first.
    """
    if not is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    return sorted(dominants_below(rs, lam), key=desc_key(rs))


def expand(rs: RootSystem, f: dict) -> dict:
    """Replace each orbit sum by the sum of exponentials over its orbit."""
    out = {}
    for mu, c in f.items():
        for x in weyl_orbit(rs, mu):
            out[x] = out.get(x, 0) + c
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _orbit_list(rs: RootSystem, mu: tuple):
    return tuple(weyl_orbit(rs, mu))


def product(rs: RootSystem, f: dict, g: dict) -> dict:
    """Exact convolution product of two invariant elements."""
    ef = expand(rs, f)
    eg = expand(rs, g)
    if len(ef) > len(eg):
        ef, eg = eg, ef
    conv = {}
    for x, cx in ef.items():
        for y, cy in eg.items():
            z = add(x, y)
            conv[z] = conv.get(z, 0) + cx * cy
    return {w: c for w, c in conv.items() if c and is_dominant(w)}


def coefficient(rs: RootSystem, f: dict, w: tuple, basis: str = "h") -> int:
    """Coefficient extraction in either basis.

    In the orbit-sum basis the key must be dominant; in the exponential
    basis the coefficient is orbit-invariant, equal to the stored value
    at the dominant representative.
    """
    if basis == "h":
        if not is_dominant(w):
            raise NotDominant(f"h-basis coefficient requires dominant key, got {w}")
        return f.get(w, 0)
    if basis == "e":
        return f.get(dominant_rep(rs, w), 0)
    raise ValueError(f"unknown basis {basis!r}")


def peel_decompose(rs: RootSystem, f: dict, family) -> dict:
    """Express f in the given character family by highest-weight peeling.

    ``family`` must expose ``row(weight)`` returning an invariant element
    with leading coefficient 1.  Peeling proceeds top-down by (.,rho):
    the coefficient at the maximal remaining weight is read off and that
    multiple of the family row is subtracted.
    """
    key = desc_key(rs)
    work = dict(f)
    result = {}
    while work:
        s = min(work, key=key)  # maximal in the descending order
        c = work.pop(s)
        if c == 0:
            continue
        result[s] = c
        row = family.row(s)
        for mu, n in row.items():
            if mu == s:
                continue
            work[mu] = work.get(mu, 0) - c * n
    return result


class DictFamily:
    """Adapter giving a plain dict of rows the family-row protocol."""

    def __init__(self, rows: dict):
        self.rows = rows

    def row(self, lam: tuple) -> dict:
        try:
            return self.rows[lam]
        except KeyError:
            raise MissingFamilyRow(f"no family row for {lam}") from None
