"""Exponent-vector monomials under the graded reverse lexicographic order.

Variables are numbered 1..n with x1 the largest.  A monomial is a tuple of
exponents; :class:`Monomial` is a tuple subclass whose rich comparisons
follow grevlex, so ``sorted`` and ``max`` do the right thing.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

import numpy as np


class Monomial(tuple):
    """x1^a1 * ... * xn^an stored as the exponent tuple (a1, ..., an)."""

    __slots__ = ()

    def __new__(cls, exponents):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be nonnegative")
        return super().__new__(cls, exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, j: int, n: int) -> Monomial:
        """The variable x_j (1-based)."""
        if not 1 <= j <= n:
            raise ValueError(f"variable index {j} out of range 1..{n}")
        return cls(tuple(1 if k == j - 1 else 0 for k in range(n)))

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def key(self):
        return grevlex_key(self)

    def __lt__(self, other):
        return grevlex_cmp(self, other) < 0

    def __le__(self, other):
        return grevlex_cmp(self, other) <= 0

    def __gt__(self, other):
        return grevlex_cmp(self, other) > 0

    def __ge__(self, other):
        return grevlex_cmp(self, other) >= 0

    # equality and hashing stay those of tuple

    def __mul__(self, other):
        return mul(self, other)

    def __truediv__(self, other):
        return quotient(self, other)

    def __repr__(self):
        return f"Monomial({tuple(self)})"

    def to_str(self, names=None) -> str:
        names = names or [f"x{k + 1}" for k in range(len(self))]
        parts = []
        for name, e in zip(names, self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    __str__ = to_str


def grevlex_key(a) -> tuple:
    """Sort key: a larger key means a larger monomial."""
    return (sum(a), tuple(-e for e in reversed(a)))


def grevlex_cmp(a, b) -> int:
    """-1, 0 or 1 as a is smaller than, equal to or larger than b."""
    if len(a) != len(b):
        raise ValueError(f"monomials in {len(a)} and {len(b)} variables")
    da, db = sum(a), sum(b)
    if da != db:
        return -1 if da < db else 1
    for ea, eb in zip(reversed(a), reversed(b)):
        if ea != eb:
            # last nonzero entry of a - b negative means a is larger
            return 1 if ea < eb else -1
    return 0


def mul(a, b) -> Monomial:
    if len(a) != len(b):
        raise ValueError("variable count mismatch")
    return Monomial(x + y for x, y in zip(a, b))


def divides(a, b) -> bool:
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def quotient(a, b) -> Monomial:
    """a / b, which requires b | a."""
    if not divides(b, a):
        raise ValueError(f"{tuple(b)} does not divide {tuple(a)}")
    return Monomial(x - y for x, y in zip(a, b))


def lcm(a, b) -> Monomial:
    return Monomial(max(x, y) for x, y in zip(a, b))


def max_var(a) -> int:
    """Largest j with a_j > 0 (1-based), 0 for the constant monomial."""
    for j in range(len(a), 0, -1):
        if a[j - 1]:
            return j
    return 0


def count(i: int, d: int) -> int:
    """|T^i_d| = C(i+d-1, d)."""
    if d < 0:
        return 0
    if i == 0:
        return 1 if d == 0 else 0
    return comb(i + d - 1, d)


@lru_cache(maxsize=None)
def _enum(i: int, d: int) -> tuple:
    # decreasing grevlex in i variables: smaller last exponent first
    if i == 0:
        return ((),) if d == 0 else ()
    if i == 1:
        return ((d,),)
    out = []
    for a in range(d + 1):
        out.extend(head + (a,) for head in _enum(i - 1, d - a))
    return tuple(out)


def enumerate_monomials(i: int, d: int, n: int | None = None) -> list[Monomial]:
    """T^i_d (monomials of degree d in x1..xi) as n-variable monomials, in
    strictly decreasing grevlex order."""
    n = i if n is None else n
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= n, got i={i}, n={n}")
    if d < 0:
        return []
    pad = (0,) * (n - i)
    return [Monomial(m + pad) for m in _enum(i, d)]


@lru_cache(maxsize=None)
def exponent_matrix(n: int, d: int) -> np.ndarray:
    """Rows are the exponent vectors of T_d in decreasing grevlex order."""
    mons = _enum(n, d)
    arr = np.array(mons, dtype=np.int64).reshape(len(mons), n)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=None)
def index_map(n: int, d: int) -> dict:
    """Exponent tuple -> column index within T_d."""
    return {m: k for k, m in enumerate(_enum(n, d))}


@lru_cache(maxsize=None)
def shift_table(n: int, d: int) -> np.ndarray:
    """Array s of shape (n, |T_{d-1}|): s[j, k] is the index in T_d of
    x_{j+1} times the k-th monomial of T_{d-1}."""
    if d < 1:
        raise ValueError("shift_table needs d >= 1")
    idx = index_map(n, d)
    prev = _enum(n, d - 1)
    out = np.empty((n, len(prev)), dtype=np.int64)
    for k, m in enumerate(prev):
        lst = list(m)
        for j in range(n):
            lst[j] += 1
            out[j, k] = idx[tuple(lst)]
            lst[j] -= 1
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def max_var_array(n: int, d: int) -> np.ndarray:
    """max_var of every monomial of T_d, 1-based (0 for the constant)."""
    e = exponent_matrix(n, d)
    if e.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    nz = e > 0
    last = n - np.argmax(nz[:, ::-1], axis=1)
    last[~nz.any(axis=1)] = 0
    last.setflags(write=False)
    return last
