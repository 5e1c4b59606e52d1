"""Arithmetic in the prime field GF(p) and dense linear algebra over it."""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

DEFAULT_PRIME = 65521

# float64 matmul is exact while every partial sum stays below 2**53
_FLOAT_EXACT = 2**53


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


class PrimeField:
    """The field of residues modulo a word-sized prime ``p``.

    Elements are plain ints in ``[0, p)``; :meth:`elem` wraps them in
    :class:`FieldElement` when operator syntax is more convenient.
    """

    def __init__(self, p: int = DEFAULT_PRIME):
        p = int(p)
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 2**31:
            raise ValueError(f"prime {p} does not fit in a machine word")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __call__(self, value: int) -> int:
        return int(value) % self.p

    def elem(self, value: int) -> FieldElement:
        return FieldElement(int(value) % self.p, self)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse modulo {self.p}")
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return (a * self.inv(b)) % self.p

    def arith(self, a: int, b: int, op: str) -> int:
        if op == "add":
            return self.add(a, b)
        if op == "sub":
            return self.sub(a, b)
        if op == "mul":
            return self.mul(a, b)
        raise ValueError(f"unknown field operation {op!r}")

    def symmetric(self, a: int) -> int:
        """Representative of ``a`` in ``(-p/2, p/2]``, used for printing."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.value
        return int(other) % self.field.p

    def __add__(self, other):
        return FieldElement(self.field.add(self.value, self._coerce(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field.sub(self.value, self._coerce(other)), self.field)

    def __rsub__(self, other):
        return FieldElement(self.field.sub(self._coerce(other), self.value), self.field)

    def __mul__(self, other):
        return FieldElement(self.field.mul(self.value, self._coerce(other)), self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field.neg(self.value), self.field)

    def __truediv__(self, other):
        return FieldElement(self.field.div(self.value, self._coerce(other)), self.field)

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.field)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF{self.field.p}({self.value})"


# ---------------------------------------------------------------------------
# dense echelon forms mod p


_PANEL = 64


def _exact_width(p: int) -> int:
    """Largest inner dimension for which float64 dot products stay exact."""
    return int(_FLOAT_EXACT // ((p - 1) ** 2 + 1))


def _inverse_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a small square matrix mod p (Gauss-Jordan, int64)."""
    k = a.shape[0]
    aug = np.concatenate([a.astype(np.int64) % p, np.eye(k, dtype=np.int64)], axis=1)
    for c in range(k):
        nz = np.flatnonzero(aug[c:, c])
        if nz.size == 0:
            raise ZeroDivisionError("singular pivot block")
        r = c + nz[0]
        if r != c:
            aug[[c, r]] = aug[[r, c]]
        aug[c] = aug[c] * pow(int(aug[c, c]), -1, p) % p
        col = aug[:, c].copy()
        col[c] = 0
        nzr = np.flatnonzero(col)
        if nzr.size:
            aug[nzr] = (aug[nzr] - np.outer(col[nzr], aug[c])) % p
    return aug[:, k:]


@numba.njit(cache=True)
def _panel_kernel(work, p):
    nrows, ncols = work.shape
    alive = np.ones(nrows, dtype=np.bool_)
    prow = np.empty(ncols, dtype=np.int64)
    pcol = np.empty(ncols, dtype=np.int64)
    k = 0
    for c in range(ncols):
        r = -1
        for i in range(nrows):
            if alive[i] and work[i, c] != 0:
                r = i
                break
        if r < 0:
            continue
        prow[k] = r
        pcol[k] = c
        k += 1
        alive[r] = False
        # modular inverse by Fermat
        inv = 1
        base = work[r, c]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for i in range(r + 1, nrows):
            if alive[i] and work[i, c] != 0:
                f = work[i, c] * inv % p
                for j in range(c, ncols):
                    work[i, j] = (work[i, j] - f * work[r, j]) % p
    return prow[:k], pcol[:k]


def _panel_pivots(panel: np.ndarray, p: int) -> tuple[list[int], list[int]]:
    """Greedy pivot (row, column) choice on a narrow panel, leftmost columns first.

    Rows are scanned in storage order, so the first row with a nonzero
    entry in a column becomes its pivot.
    """
    prow, pcol = _panel_kernel(panel.astype(np.int64), p)
    return prow.tolist(), pcol.tolist()


def _mod(x: np.ndarray, p: int) -> np.ndarray:
    """In-place reduction of exact float64 integers into [0, p)."""
    q = np.floor(x / p)
    x -= q * p
    x[x < 0] += p
    x[x >= p] -= p
    return x


def _mulmod(a: np.ndarray, b: np.ndarray, p: int, width: int) -> np.ndarray:
    """(a @ b) mod p for float64 arrays holding residues, split to keep sums exact."""
    k = a.shape[1]
    if width < 1:
        # products no longer fit a double; accumulate one rank-1 term at a time
        ai, bi = a.astype(np.int64), b.astype(np.int64)
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for s in range(k):
            out = (out + np.outer(ai[:, s], bi[s])) % p
        return out.astype(np.float64)
    if k <= width:
        return _mod(a @ b, p)
    out = np.zeros((a.shape[0], b.shape[1]))
    for s in range(0, k, width):
        out += _mod(a[:, s:s + width] @ b[s:s + width], p)
        _mod(out, p)
    return out


class EchelonBuilder:
    """Incremental reduced row echelon form over GF(p).

    Rows are fed in batches with :meth:`add`; the basis is kept in reduced
    row echelon form with pivots on the leftmost possible columns and no
    column permutation, so ``pivots`` is the set of leading columns of the
    row space.
    """

    def __init__(self, ncols: int, p: int):
        self.ncols = ncols
        self.p = p
        self.width = _exact_width(p)
        self.rows = np.zeros((0, ncols))
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def full(self) -> bool:
        return self.rank == self.ncols

    def reduce(self, a: np.ndarray) -> np.ndarray:
        """Reduce rows of ``a`` by the current basis (float64 residues).
        A single 1-D row gives a 1-D result."""
        a = np.array(a, dtype=np.float64)
        single = a.ndim == 1
        a = _mod(np.atleast_2d(a), self.p)
        if self.rank and a.size:
            coef = a[:, self.pivots]
            a = _mod(a - _mulmod(coef, self.rows, self.p, self.width), self.p)
        return a[0] if single else a

    def add(self, a: np.ndarray) -> None:
        a = np.atleast_2d(np.asarray(a))
        if self.full or a.size == 0:
            return
        a = self.reduce(a)
        a = a[np.any(a != 0, axis=1)]
        if len(a) == 0:
            return
        p, width = self.p, self.width
        new_rows: list[np.ndarray] = []
        new_piv: list[int] = []
        start = 0
        while start < self.ncols and len(a):
            stop = min(self.ncols, start + _PANEL)
            prow, pcol = _panel_pivots(a[:, start:stop], p)
            if prow:
                pcol = [start + c for c in pcol]
                inv = _inverse_mod(a[np.ix_(prow, pcol)], p).astype(np.float64)
                top = _mulmod(inv, a[prow][:, start:], p, width)
                rest = np.setdiff1d(np.arange(len(a)), prow)
                other = a[rest]
                if len(other):
                    other[:, start:] = _mod(
                        other[:, start:] - _mulmod(other[:, pcol], top, p, width), p)
                    other = other[np.any(other != 0, axis=1)]
                if new_rows:
                    # clear the new pivot columns from rows found earlier in this batch
                    prev = np.vstack(new_rows)
                    prev[:, start:] = _mod(
                        prev[:, start:] - _mulmod(prev[:, pcol], top, p, width), p)
                    new_rows = [prev]
                full_top = np.zeros((len(prow), self.ncols))
                full_top[:, start:] = top
                new_rows.append(full_top)
                new_piv.extend(pcol)
                a = other
            start = stop
        if not new_piv:
            return
        fresh = np.vstack(new_rows)
        if self.rank:
            # clear new pivot columns from the existing basis
            old = self.rows
            old = _mod(old - _mulmod(old[:, new_piv], fresh, p, width), p)
            rows = np.vstack([old, fresh])
        else:
            rows = fresh
        piv = self.pivots + new_piv
        order = np.argsort(piv, kind="stable")
        self.rows = rows[order]
        self.pivots = [piv[k] for k in order]

    def nonpivots(self) -> list[int]:
        mask = np.ones(self.ncols, dtype=bool)
        mask[self.pivots] = False
        return list(np.flatnonzero(mask))

    def as_int(self) -> np.ndarray:
        return self.rows.astype(np.int64)


def rref(matrix, p: int, batch: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``matrix`` over GF(p).

    Returns ``(rows, pivot_columns)``; ``rows`` holds only the nonzero rows,
    as int64, each with a leading 1 in its pivot column.
    """
    a = np.asarray(matrix)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    builder = EchelonBuilder(a.shape[1], p)
    step = batch or max(64, 2 * a.shape[1])
    for s in range(0, a.shape[0], step):
        builder.add(a[s:s + step])
        if builder.full:
            break
    return builder.as_int(), list(builder.pivots)


def rank(matrix, p: int) -> int:
    return len(rref(matrix, p)[1])


def matmul_mod(a, b, p: int) -> np.ndarray:
    """(a @ b) mod p for integer matrices with entries in [0, p), as int64."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    return _mulmod(a, b, p, _exact_width(p)).astype(np.int64)
