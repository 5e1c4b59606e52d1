"""Plain Buchberger algorithm used to cross-check F5 output on small inputs.

Normal selection strategy (lowest lcm degree first), no criteria, and a
degree cap, which is enough for homogeneous input.  Division works on dense
coefficient vectors of one degree at a time: the system is homogeneous, so
every polynomial met during a reduction has a single degree.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .monomial import Monomial, divides, enumerate_monomials, grevlex_key, lcm, quotient
from .polynomial import Polynomial


@dataclass(frozen=True)
class CriticalPair:
    i: int
    j: int
    lcm: Monomial

    @property
    def degree(self) -> int:
        return self.lcm.degree


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """lcm/LT(f) * f - lcm/LT(g) * g with the leading terms cancelled."""
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    (mf, cf), (mg, cg) = f.leading_term(), g.leading_term()
    L = lcm(mf, mg)
    p = f.p
    return f.mul_term(quotient(L, mf), pow(cf, -1, p)) - g.mul_term(quotient(L, mg), pow(cg, -1, p))


class _DenseDivision:
    """Multivariate division of homogeneous polynomials, one degree at a time.

    The divisor with the smallest position in the basis is always used, and
    every term is reduced (full reduction)."""

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        self.basis: list[Polynomial] = []
        self.leads: list[Monomial] = []
        self._cache: dict = {}

    def add(self, g: Polynomial):
        self.basis.append(g.monic())
        self.leads.append(g.leading_monomial())

    def _multiple(self, k: int, t: Monomial, d: int) -> np.ndarray:
        key = (k, t)
        vec = self._cache.get(key)
        if vec is None:
            vec = self.basis[k].mul_term(t).to_vector(d)
            self._cache[key] = vec
        return vec

    def _divisor(self, m: Monomial, skip: int | None) -> int:
        for k, lm in enumerate(self.leads):
            if k != skip and divides(lm, m):
                return k
        return -1

    def reduce(self, f: Polynomial, skip: int | None = None) -> Polynomial:
        if not f:
            return f
        d = f.degree
        p = self.p
        mons = enumerate_monomials(self.n, d)
        v = f.to_vector(d)
        for c in range(len(mons)):  # decreasing grevlex
            if v[c] == 0:
                continue
            k = self._divisor(mons[c], skip)
            if k < 0:
                continue
            row = self._multiple(k, quotient(mons[c], self.leads[k]), d)
            v = (v - v[c] * row) % p
        return Polynomial.from_vector(v, self.n, d, f.field, f.names)


def buchberger(system: list[Polynomial], degree_cap: int | None = None,
               max_pairs: int = 200_000) -> list[Polynomial]:
    """Reduced grevlex Gröbner basis truncated at ``degree_cap``
    (default: the Macaulay bound of the input degrees)."""
    polys = [f for f in system if f]
    if not polys:
        return []
    n, p = polys[0].n, polys[0].p
    for f in polys:
        if not f.is_homogeneous():
            raise ValueError(f"non-homogeneous input: {f}")
    if degree_cap is None:
        degree_cap = sum(f.degree - 1 for f in polys) + 1
    div = _DenseDivision(n, p)
    heap: list = []
    processed = 0

    def push_pairs(new: int):
        for old in range(new):
            L = lcm(div.leads[old], div.leads[new])
            if L.degree <= degree_cap:
                heapq.heappush(heap, (L.degree, old, new))

    # inputs enter in degree order, each reduced by what is already there
    for f in sorted(polys, key=lambda g: g.degree):
        r = div.reduce(f)
        if r:
            div.add(r)
            push_pairs(len(div.basis) - 1)
    while heap:
        _, i, j = heapq.heappop(heap)
        processed += 1
        if processed > max_pairs:
            raise RuntimeError(f"more than {max_pairs} critical pairs; instance too large for the oracle")
        r = div.reduce(s_polynomial(div.basis[i], div.basis[j]))
        if r:
            div.add(r)
            push_pairs(len(div.basis) - 1)
    return _reduced(div)


def _reduced(div: _DenseDivision) -> list[Polynomial]:
    order = sorted(range(len(div.basis)), key=lambda k: grevlex_key(div.leads[k]))
    keep = []
    for k in order:
        if not any(divides(div.leads[j], div.leads[k]) for j in keep):
            keep.append(k)
    final = _DenseDivision(div.n, div.p)
    for k in keep:
        final.add(div.basis[k])
    out = []
    for pos in range(len(keep)):
        out.append(final.reduce(final.basis[pos], skip=pos).monic())
    return out


def minimal_leads(basis) -> set:
    """Minimal generators of the ideal spanned by the leading monomials."""
    mons = []
    for g in basis:
        if isinstance(g, Polynomial):
            if g:
                mons.append(g.leading_monomial())
        elif hasattr(g, "polynomial"):
            mons.append(g.polynomial.leading_monomial())
        else:
            mons.append(Monomial(g))
    mons = sorted(set(mons), key=grevlex_key)
    out: list = []
    for m in mons:
        if not any(divides(a, m) for a in out):
            out.append(m)
    return set(out)


def compare_lt_ideals(A, B) -> bool:
    """True when both bases have the same minimal leading-monomial generators."""
    return minimal_leads(A) == minimal_leads(B)


__all__ = ["CriticalPair", "s_polynomial", "buchberger", "compare_lt_ideals", "minimal_leads"]
