"""Matrix-F5: signature-indexed Macaulay matrices built degree by degree.

Rows of the degree-d matrix carry a signature (i, t) and are kept in
increasing signature order.  A row (i, u*x_j) is built from its reduced
parent (i, u) of degree d-1 with j >= max_var(u), unless u*x_j is a leading
monomial of the degree d-d_i matrix of f_1..f_{i-1} (the F5 criterion).
Elimination only ever subtracts an earlier (smaller signature) row, so
signatures never change.

Rows are stored sparse and monic.  The elimination kernel is compiled with
numba; operation counts are exact and deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

import numba
import numpy as np

from .monomial import Monomial, count, enumerate_monomials, exponent_matrix, max_var, max_var_array, shift_table
from .polynomial import Polynomial, normal_form

MODES = ("top", "full")


@dataclass(frozen=True)
class Signature:
    """(i, t): index first, then the multiplier under grevlex."""

    index: int
    multiplier: Monomial

    def sort_key(self):
        return (self.index, self.multiplier.key())

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        return self.sort_key() >= other.sort_key()

    def to_str(self, names=None):
        return f"({self.index},{self.multiplier.to_str(names)})"


@dataclass
class GBasisElement:
    signature: Signature
    polynomial: Polynomial

    @property
    def leading_monomial(self) -> Monomial:
        return self.polynomial.leading_monomial()

    @property
    def degree(self) -> int:
        return self.polynomial.degree


@dataclass
class StepStats:
    d: int
    i: int
    rows: int = 0  # rows of M_{d,i}
    new_rows: int = 0  # rows of index i built at this step
    excluded: int = 0
    mults: int = 0
    norms: int = 0
    zero_reductions: int = 0

    def as_dict(self):
        return {
            "d": self.d, "i": self.i, "rows": self.rows, "new_rows": self.new_rows,
            "excluded": self.excluded, "mults": self.mults, "norms": self.norms,
            "zero_reductions": self.zero_reductions,
        }


_TOTAL_KEYS = ("rows", "new_rows", "excluded", "mults", "norms", "zero_reductions")


@dataclass
class RunStats:
    p: int
    n: int
    degrees: list
    D: int
    mode: str
    per_step: list = dc_field(default_factory=list)
    signature_violations: int = 0
    polys_computed: int = 0

    @property
    def m(self) -> int:
        return len(self.degrees)

    def totals(self) -> dict:
        return {k: sum(getattr(s, k) for s in self.per_step) for k in _TOTAL_KEYS}

    @property
    def mults(self) -> int:
        return self.totals()["mults"]

    @property
    def zero_reductions(self) -> int:
        return self.totals()["zero_reductions"]

    def step(self, d: int, i: int) -> StepStats:
        for s in self.per_step:
            if s.d == d and s.i == i:
                return s
        raise KeyError((d, i))

    def as_dict(self) -> dict:
        return {
            "p": self.p, "n": self.n, "m": self.m, "degrees": list(self.degrees),
            "D": self.D, "mode": self.mode,
            "per_step": [s.as_dict() for s in self.per_step],
            "totals": self.totals(),
            "polys_computed": self.polys_computed,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.as_dict(), **kw)

    def merge(self, other: RunStats) -> RunStats:
        """Aggregate of two runs' counters (step lists are concatenated)."""
        return RunStats(self.p, self.n, list(self.degrees), max(self.D, other.D), self.mode,
                        list(self.per_step) + list(other.per_step),
                        self.signature_violations + other.signature_violations,
                        self.polys_computed + other.polys_computed)


# ---------------------------------------------------------------------------
# elimination kernel


@numba.njit(cache=True)
def _reduce_rows(start, cand_parent, cand_j, par_ptr, par_cols, par_vals, shift,
                 ptr, cols, vals, nrows, piv_row, p, full, w, out_row, counters):
    """Build and reduce candidate rows from ``start`` on.

    Returns (next candidate, nrows).  Stops early when the storage might not
    hold another dense row.  counters = [mults, norms, zeros, violations].
    """
    ncols = w.shape[0]
    cap = cols.shape[0]
    k = start
    while k < cand_parent.shape[0]:
        if ptr[nrows] + ncols > cap or nrows + 1 >= ptr.shape[0]:
            break
        r = cand_parent[k]
        j = cand_j[k]
        lo = ncols
        for e in range(par_ptr[r], par_ptr[r + 1]):
            c = shift[j, par_cols[e]]
            w[c] = par_vals[e]
            if c < lo:
                lo = c
        c = lo
        lead = -1
        # top reduction
        while c < ncols:
            if w[c] == 0:
                c += 1
                continue
            pr = piv_row[c]
            if pr < 0:
                lead = c
                break
            if pr >= nrows:
                counters[3] += 1
            f = w[c]
            for e in range(ptr[pr], ptr[pr + 1]):
                cc = cols[e]
                w[cc] = (w[cc] - f * vals[e]) % p
            counters[0] += ptr[pr + 1] - ptr[pr] - 1
            c += 1
        if lead < 0:
            counters[2] += 1
            out_row[k] = -1
            k += 1
            continue
        if full:
            for c in range(lead + 1, ncols):
                if w[c] != 0:
                    pr = piv_row[c]
                    if pr >= 0:
                        f = w[c]
                        for e in range(ptr[pr], ptr[pr + 1]):
                            cc = cols[e]
                            w[cc] = (w[cc] - f * vals[e]) % p
                        counters[0] += ptr[pr + 1] - ptr[pr] - 1
        # make monic
        a = w[lead]
        if a != 1:
            inv = 1
            e = p - 2
            while e > 0:
                if e & 1:
                    inv = inv * a % p
                a = a * a % p
                e >>= 1
            for c in range(lead + 1, ncols):
                if w[c] != 0:
                    w[c] = w[c] * inv % p
                    counters[1] += 1
            w[lead] = 1
        # store and clear the work vector
        pos = ptr[nrows]
        for c in range(lead, ncols):
            if w[c] != 0:
                cols[pos] = c
                vals[pos] = w[c]
                w[c] = 0
                pos += 1
        ptr[nrows + 1] = pos
        piv_row[lead] = nrows
        out_row[k] = nrows
        nrows += 1
        k += 1
    return k, nrows


@numba.njit(cache=True)
def _classify(i, leads, mults, g_lead, g_index, g_count, s_lead, s_mult, s_index, s_count,
              to_g, to_s):
    """Decide basis insertion for new rows of index i (increasing signature).

    G (g_*): leading monomial not divisible by the LT of an element of index
    <= i.  Signature set (s_*): a row ((i, u), m) is redundant when some kept
    ((j, t), l) has l | m and (j, t*m/l) <= (i, u).
    Returns the updated counts.
    """
    n = leads.shape[1]
    for r in range(leads.shape[0]):
        red = False
        for k in range(s_count):
            if s_index[k] > i:
                continue
            div = True
            for v in range(n):
                if s_lead[k, v] > leads[r, v]:
                    div = False
                    break
            if not div:
                continue
            if s_index[k] < i:
                red = True
                break
            # grevlex: t*m/l <= u iff equal or the last nonzero difference is positive
            le = True
            for v in range(n - 1, -1, -1):
                dv = s_mult[k, v] + leads[r, v] - s_lead[k, v] - mults[r, v]
                if dv != 0:
                    le = dv > 0
                    break
            if le:
                red = True
                break
        if not red:
            s_lead[s_count] = leads[r]
            s_mult[s_count] = mults[r]
            s_index[s_count] = i
            s_count += 1
            to_s[r] = True
        hit = False
        for k in range(g_count):
            if g_index[k] > i:
                continue
            div = True
            for v in range(n):
                if g_lead[k, v] > leads[r, v]:
                    div = False
                    break
            if div:
                hit = True
                break
        if not hit:
            g_lead[g_count] = leads[r]
            g_index[g_count] = i
            g_count += 1
            to_g[r] = True
    return g_count, s_count


class _LeadTable:
    """Leading monomials (and signatures) of the elements kept so far."""

    def __init__(self, n: int, cap: int = 64):
        self.g_count = 0
        self.s_count = 0
        self.g_lead = np.zeros((cap, n), dtype=np.int64)
        self.g_index = np.zeros(cap, dtype=np.int64)
        self.s_lead = np.zeros((cap, n), dtype=np.int64)
        self.s_mult = np.zeros((cap, n), dtype=np.int64)
        self.s_index = np.zeros(cap, dtype=np.int64)

    def _reserve(self, extra: int):
        need = max(self.g_count, self.s_count) + extra
        cap = self.g_index.shape[0]
        if need <= cap:
            return
        new = max(need, 2 * cap)
        for name in ("g_lead", "g_index", "s_lead", "s_mult", "s_index"):
            arr = getattr(self, name)
            pad = np.zeros((new - cap,) + arr.shape[1:], dtype=arr.dtype)
            setattr(self, name, np.concatenate([arr, pad]))

    def classify(self, i: int, leads: np.ndarray, mults: np.ndarray):
        k = leads.shape[0]
        self._reserve(k)
        to_g = np.zeros(k, dtype=np.bool_)
        to_s = np.zeros(k, dtype=np.bool_)
        self.g_count, self.s_count = _classify(
            i, leads, mults, self.g_lead, self.g_index, self.g_count,
            self.s_lead, self.s_mult, self.s_index, self.s_count, to_g, to_s)
        return to_g, to_s


class _Store:
    """Sparse monic rows of one degree, in increasing signature order."""

    def __init__(self, d: int, ncols: int, row_cap: int = 64, nnz_cap: int = 1 << 12):
        self.d = d
        self.ncols = ncols
        self.nrows = 0
        self.ptr = np.zeros(row_cap + 1, dtype=np.int64)
        self.cols = np.zeros(max(nnz_cap, ncols + 1), dtype=np.int32)
        self.vals = np.zeros(max(nnz_cap, ncols + 1), dtype=np.int64)
        self.piv_row = np.full(ncols, -1, dtype=np.int64)
        self.sig_index = np.zeros(row_cap, dtype=np.int64)
        self.sig_mult = np.zeros(row_cap, dtype=np.int64)  # index in T_{d - d_i}
        self.lead = np.zeros(row_cap, dtype=np.int64)

    def grow(self, extra_rows: int):
        need_rows = self.nrows + extra_rows + 1
        if need_rows >= self.ptr.shape[0]:
            cap = max(need_rows + 1, 2 * self.ptr.shape[0])
            self.ptr = np.concatenate([self.ptr, np.zeros(cap - self.ptr.shape[0], dtype=np.int64)])
            for name in ("sig_index", "sig_mult", "lead"):
                arr = getattr(self, name)
                setattr(self, name, np.concatenate([arr, np.zeros(cap - arr.shape[0], dtype=np.int64)]))
        used = int(self.ptr[self.nrows])
        if used + self.ncols > self.cols.shape[0]:
            cap = max(used + 4 * self.ncols, 2 * self.cols.shape[0])
            self.cols = np.concatenate([self.cols, np.zeros(cap - self.cols.shape[0], dtype=np.int32)])
            self.vals = np.concatenate([self.vals, np.zeros(cap - self.vals.shape[0], dtype=np.int64)])

    def row(self, r: int):
        a, b = self.ptr[r], self.ptr[r + 1]
        return self.cols[a:b], self.vals[a:b]

    def leads(self, upto_index: int | None = None) -> np.ndarray:
        lead = self.lead[:self.nrows]
        if upto_index is None:
            return lead
        return lead[self.sig_index[:self.nrows] <= upto_index]

    def compact_meta(self):
        """Keep only what later criteria need once this degree is finished."""
        return _Meta(self.d, self.lead[:self.nrows].copy(), self.sig_index[:self.nrows].copy())


@dataclass
class _Meta:
    d: int
    lead: np.ndarray
    sig_index: np.ndarray


def f5_criterion(crit, t) -> bool:
    """True when the row with multiplier t is redundant, i.e. t is a leading
    monomial of the smaller-index matrix crit."""
    return t in crit


@dataclass
class F5Result:
    system: list
    bases: list  # bases[i-1] = G_i, list of GBasisElement
    stats: RunStats
    lt_sets: dict  # (d, i) -> sorted leading-column indices of M~_{d,i}
    D: int
    traces: dict = dc_field(default_factory=dict)  # (d, i) -> StepTrace when traced

    @property
    def n(self):
        return self.stats.n

    def basis(self, i: int | None = None) -> list:
        return self.bases[(i or len(self.bases)) - 1]

    def leading_monomials(self, d: int, i: int) -> set:
        mons = enumerate_monomials(self.n, d)
        return {mons[c] for c in self.lt_sets.get((d, i), [])}

    def polys_computed(self) -> int:
        """Rows that are not redundant in the signature sense, i.e. what a
        signature-based F5 keeps (this includes the redundant elements that
        never enter the reduced basis)."""
        return self.stats.polys_computed

    def polys_in_basis(self) -> int:
        """Size of G_m under plain leading-term divisibility."""
        return len(self.bases[-1]) if self.bases else 0

    def reduced_basis(self) -> list:
        return reduce_basis(self.bases[-1]) if self.bases else []


def _validate(system):
    if not system:
        raise ValueError("empty system")
    n, p = system[0].n, system[0].p
    degs = []
    for f in system:
        if f.n != n or f.p != p:
            raise ValueError("polynomials of the system live in different rings")
        if not f:
            raise ValueError("zero polynomial in the system")
        if not f.is_homogeneous():
            raise ValueError(f"non-homogeneous polynomial: {f}")
        degs.append(f.degree)
    if any(a > b for a, b in zip(degs, degs[1:])):
        raise ValueError(f"system must be sorted by degree, got degrees {degs}")
    if degs[0] < 1:
        raise ValueError("constant polynomial in the system")
    return n, p, degs


def build_step(parents: _Store | None, i: int, d: int, d_i: int, n: int,
               crit_mask: np.ndarray | None):
    """Candidate rows (parent row, variable) of index i in degree d, in
    increasing signature order, plus their multiplier indices and the
    multiplier indices of the rows skipped by the criterion.

    ``crit_mask`` marks the leading monomials in T_{d-d_i} of the matrix of
    f_1..f_{i-1}; None means no row is excluded.
    """
    e = d - d_i
    if parents is None or e < 1:
        return (np.zeros(0, np.int64),) * 4
    sel = np.flatnonzero(parents.sig_index[:parents.nrows] == i)
    if sel.size == 0:
        return (np.zeros(0, np.int64),) * 4
    umult = parents.sig_mult[sel]
    mv = max_var_array(n, e - 1)[umult]
    mshift = shift_table(n, e)
    rows, js, mults = [], [], []
    for j in range(n):
        ok = np.maximum(mv, 1) <= j + 1
        if ok.any():
            rows.append(sel[ok])
            js.append(np.full(int(ok.sum()), j, dtype=np.int64))
            mults.append(mshift[j, umult[ok]])
    rows = np.concatenate(rows)
    js = np.concatenate(js)
    mults = np.concatenate(mults)
    excluded = np.zeros(0, np.int64)
    if crit_mask is not None:
        keep = ~crit_mask[mults]
        excluded = np.sort(mults[~keep])[::-1]
        rows, js, mults = rows[keep], js[keep], mults[keep]
    # increasing signature = decreasing multiplier index
    order = np.argsort(-mults, kind="stable")
    return rows[order], js[order], mults[order], excluded


def run(system: list[Polynomial], D: int | None = None, mode: str = "top",
        trace: bool = False) -> F5Result:
    """Matrix-F5 up to degree D (default: the Macaulay bound).

    With ``trace`` the result also records, per step (d, i), the reduced new
    rows as (signature, polynomial) in signature order and the signatures
    removed by the criterion (meant for small examples)."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    n, p, degs = _validate(system)
    m = len(system)
    if D is None:
        D = sum(x - 1 for x in degs) + 1
    if D < degs[0]:
        raise ValueError(f"degree bound {D} is below the smallest degree {degs[0]}")
    stats = RunStats(p, n, degs, D, mode)
    added: list = []
    table = _LeadTable(n)
    names = system[0].names
    metas: dict = {}
    lt_sets: dict = {}
    traces: dict = {}
    prev: _Store | None = None
    counters = np.zeros(4, dtype=np.int64)
    identity_shift: dict = {}
    for d in range(degs[0], D + 1):
        C = count(n, d)
        cur = _Store(d, C)
        w = np.zeros(C, dtype=np.int64)
        mons_d = None
        for i in range(1, m + 1):
            d_i = degs[i - 1]
            step = StepStats(d, i)
            if d < d_i:
                step.rows = cur.nrows
                stats.per_step.append(step)
                lt_sets[(d, i)] = np.sort(cur.leads())
                continue
            if d == d_i:
                f = system[i - 1]
                vec = f.to_vector(d)
                nz = np.flatnonzero(vec)
                par_ptr = np.array([0, nz.size], dtype=np.int64)
                par_cols = nz.astype(np.int32)
                par_vals = vec[nz].astype(np.int64)
                if C not in identity_shift:
                    identity_shift[C] = np.arange(C, dtype=np.int64).reshape(1, C)
                shift = identity_shift[C]
                cand_parent = np.zeros(1, np.int64)
                cand_j = np.zeros(1, np.int64)
                cand_mult = np.zeros(1, np.int64)
                excluded = np.zeros(0, np.int64)
            else:
                e = d - d_i
                crit_mask = None
                if i > 1 and e in metas:
                    meta = metas[e]
                    crit_mask = np.zeros(count(n, e), dtype=bool)
                    crit_mask[meta.lead[meta.sig_index < i]] = True
                cand_parent, cand_j, cand_mult, excluded = build_step(prev, i, d, d_i, n, crit_mask)
                par_ptr, par_cols, par_vals = prev.ptr, prev.cols, prev.vals
                shift = shift_table(n, d)
            step.excluded = int(excluded.size)
            step.new_rows = int(cand_parent.size)
            step.rows = cur.nrows + step.new_rows
            before = counters.copy()
            out_row = np.full(cand_parent.size, -1, dtype=np.int64)
            k = 0
            first_new = cur.nrows
            while k < cand_parent.size:
                cur.grow(cand_parent.size - k)
                k, cur.nrows = _reduce_rows(
                    k, cand_parent, cand_j, par_ptr, par_cols, par_vals, shift,
                    cur.ptr, cur.cols, cur.vals, cur.nrows, cur.piv_row, p,
                    mode == "full", w, out_row, counters)
            stored = out_row >= 0
            rows_new = out_row[stored]
            cur.sig_index[rows_new] = i
            cur.sig_mult[rows_new] = cand_mult[stored]
            for r in range(first_new, cur.nrows):
                a = cur.ptr[r]
                cur.lead[r] = cur.cols[a]
            diff = counters - before
            step.mults = int(diff[0])
            step.norms = int(diff[1])
            step.zero_reductions = int(diff[2])
            stats.signature_violations += int(diff[3])
            stats.per_step.append(step)
            lt_sets[(d, i)] = np.sort(cur.leads())
            if trace:
                _record(traces, cur, rows_new, cand_mult[stored], excluded, system, d, i)
            # basis extraction: G_i = G_{i-1} plus rows not top-reducible by G_i
            if rows_new.size:
                mults_new = cand_mult[stored]
                exps_d = exponent_matrix(n, d)
                to_g, _ = table.classify(i, exps_d[cur.lead[rows_new]],
                                         exponent_matrix(n, d - d_i)[mults_new])
                if to_g.any():
                    if mons_d is None:
                        mons_d = enumerate_monomials(n, d)
                    mons_e = enumerate_monomials(n, d - d_i)
                    for r, mult in zip(rows_new[to_g], mults_new[to_g]):
                        rc, rv = cur.row(r)
                        poly = Polynomial({mons_d[c]: int(v) for c, v in zip(rc, rv)}, n, p, names)
                        added.append(GBasisElement(Signature(i, mons_e[mult]), poly))
        metas[d] = cur.compact_meta()
        prev = cur
    bases = [[g for g in added if g.signature.index <= i] for i in range(1, m + 1)]
    stats.polys_computed = table.s_count
    return F5Result(list(system), bases, stats, lt_sets, D, traces)


def _record(traces, cur, rows_new, mults_new, excluded, system, d, i):
    f = system[i - 1]
    n, names = f.n, f.names
    e = d - f.degree
    mons_d, mons_e = enumerate_monomials(n, d), enumerate_monomials(n, e)
    rows = []
    for r, mult in zip(rows_new, mults_new):
        rc, rv = cur.row(r)
        poly = Polynomial({mons_d[c]: int(v) for c, v in zip(rc, rv)}, n, f.field, names)
        rows.append((Signature(i, mons_e[mult]), poly))
    traces[(d, i)] = StepTrace(rows, [Signature(i, mons_e[k]) for k in excluded])


@dataclass
class StepTrace:
    rows: list  # (Signature, Polynomial) of the reduced new rows
    excluded: list  # signatures skipped by the criterion


def valid_eliminate(rows: list[tuple[Signature, np.ndarray]], p: int, mode: str = "top",
                    base: list[np.ndarray] | None = None):
    """Valid elimination of a small dense signed matrix (reference version).

    ``rows`` must be sorted by increasing signature.  ``base`` holds reduced
    rows of smaller signature than every row in ``rows`` (for instance the
    rows of the previous index).  Returns (reduced rows with signatures,
    mults, norms, zero_reductions); zero rows are dropped.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    pivots: dict = {}
    for b in base or []:
        b = np.asarray(b, dtype=np.int64) % p
        nz = np.flatnonzero(b)
        if nz.size:
            pivots[int(nz[0])] = b * pow(int(b[nz[0]]), -1, p) % p
    out, mults, norms, zeros = [], 0, 0, 0
    last = None
    for sig, vec in rows:
        if last is not None and not last < sig:
            raise ValueError("rows must be in strictly increasing signature order")
        last = sig
        v = np.asarray(vec, dtype=np.int64) % p
        lead = -1
        for c in range(v.size):
            if v[c] == 0:
                continue
            if c in pivots:
                v = (v - v[c] * pivots[c]) % p
                mults += int(np.count_nonzero(pivots[c])) - 1
                continue
            lead = c
            break
        if lead < 0:
            zeros += 1
            continue
        if mode == "full":
            for c in range(lead + 1, v.size):
                if v[c] and c in pivots:
                    mults += int(np.count_nonzero(pivots[c])) - 1
                    v = (v - v[c] * pivots[c]) % p
        if v[lead] != 1:
            norms += int(np.count_nonzero(v)) - 1
            v = v * pow(int(v[lead]), -1, p) % p
        pivots[lead] = v
        out.append((sig, v))
    return out, mults, norms, zeros


def extract_basis(rows: list[tuple[Signature, Polynomial]], G: list) -> list:
    """Append rows whose leading monomial is not divisible by any LT in G."""
    G = list(G)
    leads = [g.leading_monomial for g in G]
    for sig, poly in rows:
        if not poly:
            continue
        lm = poly.leading_monomial()
        if any(all(a <= b for a, b in zip(l, lm)) for l in leads):
            continue
        G.append(GBasisElement(sig, poly))
        leads.append(lm)
    return G


@dataclass
class StructureReport:
    checked: int = 0
    violations: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def structure_check(result: F5Result, snp: bool = True, bound: int | None = None) -> StructureReport:
    """Check the shape of the F5 bases expected for inputs in simultaneous
    Noether position: signature (j, t) of an element of G_i has j <= i,
    t in T^{j-1} and LT in T^j.  Degrees are checked against ``bound``
    (default: the Macaulay bound)."""
    rep = StructureReport()
    degs = result.stats.degrees
    bound = sum(x - 1 for x in degs) + 1 if bound is None else bound
    for i, G in enumerate(result.bases, start=1):
        for g in G:
            rep.checked += 1
            j, t = g.signature.index, g.signature.multiplier
            lm = g.leading_monomial
            if j > i:
                rep.violations.append((i, g.signature, "index exceeds step"))
            if g.degree > bound:
                rep.violations.append((i, g.signature, f"degree {g.degree} > {bound}"))
            if snp:
                if max_var(t) > j - 1:
                    rep.violations.append((i, g.signature, "multiplier outside T^{j-1}"))
                if max_var(lm) > j:
                    rep.violations.append((i, g.signature, "leading term outside T^j"))
    return rep


def reduce_basis(G: list) -> list[Polynomial]:
    """Minimal reduced monic basis from a (possibly redundant) F5 basis,
    sorted by increasing leading monomial."""
    polys = [g.polynomial if isinstance(g, GBasisElement) else g for g in G]
    polys = [f for f in polys if f]
    # minimalize: drop elements whose LT is divisible by another kept LT
    polys.sort(key=lambda f: f.leading_monomial().key())
    kept: list = []
    for f in polys:
        lm = f.leading_monomial()
        if any(all(a <= b for a, b in zip(g.leading_monomial(), lm)) for g in kept):
            continue
        kept.append(f)
    out = []
    for k, f in enumerate(kept):
        others = kept[:k] + kept[k + 1:]
        out.append(normal_form(f, others).monic())
    return out
