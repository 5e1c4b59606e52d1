"""Macaulay matrices, their echelon forms and Hilbert functions.

Two routes to the Hilbert function are provided.  :func:`hilbert_function`
takes the rank of the full degree-d Macaulay matrix, which is the textbook
definition and is used as a reference on small inputs.  :func:`hilbert_series`
walks degree by degree through the quotient ring, keeping the normal form of
every monomial in a basis of the quotient, so each step only eliminates
matrices whose width is n times the previous Hilbert function value.  That
keeps regularity checks cheap at sizes where the full matrix (tens of
thousands of rows and columns) would be out of reach.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field as dc_field

import numpy as np

from .field import EchelonBuilder, matmul_mod, rref
from .monomial import Monomial, count, enumerate_monomials, exponent_matrix, index_map, shift_table
from .polynomial import Polynomial


def _check_system(system):
    if not system:
        return
    n, p = system[0].n, system[0].p
    for f in system:
        if f.n != n or f.p != p:
            raise ValueError("polynomials of the system live in different rings")
        if not f.is_homogeneous():
            raise ValueError(f"{f} is not homogeneous")


@dataclass
class MacaulayMatrix:
    degree: int
    n: int
    p: int
    labels: list  # (i, t): 1-based polynomial index and multiplier monomial
    matrix: np.ndarray  # int64, rows x C(n+d-1, d)
    columns: list = dc_field(default_factory=list)

    @property
    def shape(self):
        return self.matrix.shape

    def to_csv(self, path, names=None):
        names = names or [f"x{k + 1}" for k in range(self.n)]
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["row"] + [m.to_str(names) for m in self.columns])
            for (i, t), row in zip(self.labels, self.matrix):
                w.writerow([f"({i},{t.to_str(names)})"] + [int(v) for v in row])


def build(system: list[Polynomial], d: int, n: int | None = None, p: int | None = None) -> MacaulayMatrix:
    """Degree-d Macaulay matrix: one row t*f_i per t in T_{d-d_i}."""
    _check_system(system)
    if system:
        n, p = system[0].n, system[0].p
    elif n is None or p is None:
        raise ValueError("an empty system needs n and p")
    cols = enumerate_monomials(n, d)
    idx = index_map(n, d)
    labels, rows = [], []
    for i, f in enumerate(system, start=1):
        if not f:
            continue
        e = d - f.degree
        if e < 0:
            continue
        for t in enumerate_monomials(n, e):
            row = np.zeros(len(cols), dtype=np.int64)
            for m, c in f.terms.items():
                row[idx[tuple(a + b for a, b in zip(m, t))]] = c
            labels.append((i, t))
            rows.append(row)
    mat = np.array(rows, dtype=np.int64).reshape(len(rows), len(cols))
    return MacaulayMatrix(d, n, p, labels, mat, cols)


@dataclass
class EchelonResult:
    rank: int
    pivots: list  # pivot monomials, decreasing grevlex
    rows: np.ndarray  # reduced rows, each monic at its pivot
    pivot_columns: list


def echelon(M: MacaulayMatrix) -> EchelonResult:
    """Reduced row echelon form; columns are never permuted, so the pivot
    monomials are exactly the leading monomials of the row space."""
    if M.matrix.shape[0] == 0:
        return EchelonResult(0, [], np.zeros((0, M.matrix.shape[1]), dtype=np.int64), [])
    rows, piv = rref(M.matrix, M.p)
    return EchelonResult(len(piv), [M.columns[c] for c in piv], rows, piv)


def hilbert_function(system: list[Polynomial], d: int, n: int | None = None) -> int:
    """dim R_d / I_d through the rank of the degree-d Macaulay matrix."""
    if system:
        n = system[0].n
    elif n is None:
        raise ValueError("an empty system needs n")
    total = count(n, d)
    if not system:
        return total
    M = build(system, d)
    return total - echelon(M).rank


def _down_table(n: int, d: int) -> np.ndarray:
    """down[j, k] = index in T_{d-1} of (k-th monomial of T_d) / x_{j+1}, or -1."""
    s = shift_table(n, d)
    out = np.full((n, count(n, d)), -1, dtype=np.int64)
    cols = np.arange(s.shape[1])
    for j in range(n):
        out[j, s[j]] = cols
    return out


def hilbert_series(system: list[Polynomial], trunc: int, n: int | None = None) -> list[int]:
    """[HF(0), ..., HF(trunc)] computed through the quotient ring.

    ``nf`` holds, for each monomial of T_d, the coordinates of its class in
    a basis of (R/I)_d.  The classes of degree d+1 are spanned by the
    products x_j * (class of degree d); the relations among these are the
    commutation rules x_j*[w/x_j] = x_k*[w/x_k] and the new generators.
    """
    _check_system(system)
    if system:
        n, p = system[0].n, system[0].p
    elif n is None:
        raise ValueError("an empty system needs n")
    else:
        return [count(n, d) for d in range(trunc + 1)]
    by_degree: dict = {}
    for f in system:
        if f:
            by_degree.setdefault(f.degree, []).append(f)

    # degree 0: R_0 = k, killed by any nonzero constant
    h = 0 if 0 in by_degree else 1
    nf = np.ones((1, h), dtype=np.int64)
    out = [h]
    for d in range(trunc):
        if h == 0:
            out.extend([0] * (trunc - d))
            break
        C1 = count(n, d + 1)
        N = n * h
        down = _down_table(n, d + 1)
        exps = exponent_matrix(n, d + 1)
        # representation of w as x_j * [w / x_j] with j = max_var(w)
        jstar = n - 1 - np.argmax(exps[:, ::-1] > 0, axis=1)
        rep = np.zeros((C1, N), dtype=np.int64)
        rows_idx = np.arange(C1)
        for j in range(n):
            sel = rows_idx[jstar == j]
            if sel.size:
                rep[np.ix_(sel, np.arange(j * h, (j + 1) * h))] = nf[down[j, sel]]
        # commutation relations between consecutive variables in the support
        pos = exps > 0
        blocks = []
        for a in range(n):
            for b in range(a + 1, n):
                mask = pos[:, a] & pos[:, b]
                if b > a + 1:
                    mask &= ~pos[:, a + 1:b].any(axis=1)
                ws = np.flatnonzero(mask)
                if ws.size:
                    r = np.zeros((ws.size, N), dtype=np.int64)
                    r[:, a * h:(a + 1) * h] = nf[down[a, ws]]
                    r[:, b * h:(b + 1) * h] -= nf[down[b, ws]]
                    blocks.append(r)
        rel = np.vstack(blocks) if blocks else np.zeros((0, N), dtype=np.int64)
        rel %= p
        gens = by_degree.get(d + 1, [])
        if gens:
            F = np.array([g.to_vector(d + 1) for g in gens], dtype=np.int64)
            rel = np.vstack([rel, matmul_mod(F, rep, p)])
        rel = rel[np.any(rel != 0, axis=1)]
        builder = EchelonBuilder(N, p)
        step = max(256, 2 * N)
        for s in range(0, len(rel), step):
            builder.add(rel[s:s + step])
            if builder.full:
                break
        piv = list(builder.pivots)
        Q = builder.nonpivots()
        h = len(Q)
        if h == 0:
            nf = np.zeros((C1, 0), dtype=np.int64)
        elif not piv:
            nf = rep[:, Q]
        else:
            E = builder.as_int()
            nf = (rep[:, Q] - matmul_mod(rep[:, piv], E[:, Q], p)) % p
        out.append(h)
    return out


def dump_csv(system: list[Polynomial], d: int, path, names=None):
    """Write the degree-d Macaulay matrix as CSV (debugging aid)."""
    build(system, d).to_csv(path, names or (system[0].names if system else None))


__all__ = [
    "MacaulayMatrix",
    "EchelonResult",
    "Monomial",
    "build",
    "echelon",
    "hilbert_function",
    "hilbert_series",
    "dump_csv",
]
