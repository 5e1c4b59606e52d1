"""Complexity bounds for matrix-F5 on regular sequences.

Exact quantities (the b_d^(i) series, the operation bound N_F5) use Python
integers; logarithms are only taken for reporting.  The asymptotic constants
come from one-dimensional root finding by bisection.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from math import comb, lgamma, log, log2

STRASSEN = log2(7)
OMEGAS = (3.0, STRASSEN, 2.376)


def _degree_list(degrees, m: int | None = None) -> list[int]:
    if isinstance(degrees, int):
        if m is None:
            raise ValueError("m is required with a uniform degree")
        return [degrees] * m
    degs = [int(d) for d in degrees]
    if m is not None and len(degs) != m:
        raise ValueError(f"expected {m} degrees, got {len(degs)}")
    return degs


def macaulay_bound(degrees) -> int:
    degs = list(degrees) if not isinstance(degrees, int) else [degrees]
    if not degs:
        raise ValueError("need at least one degree")
    return sum(d - 1 for d in degs) + 1


def _poly_mul(a: list[int], b: list[int], trunc: int) -> list[int]:
    out = [0] * (trunc + 1)
    for i, x in enumerate(a):
        if x == 0 or i > trunc:
            continue
        for j, y in enumerate(b):
            if i + j > trunc:
                break
            out[i + j] += x * y
    return out


def b_series(i: int, degrees, trunc: int | None = None) -> list[int]:
    """Coefficients of z^{d_i} * prod_{k<i} (1 - z^{d_k}) / (1 - z)."""
    degs = _degree_list(degrees)
    if not 1 <= i <= len(degs):
        raise ValueError(f"index {i} out of range 1..{len(degs)}")
    full = degs[i - 1] + sum(d - 1 for d in degs[: i - 1])
    trunc = full if trunc is None else trunc
    out = [0] * (trunc + 1)
    if degs[i - 1] <= trunc:
        out[degs[i - 1]] = 1
    for d in degs[: i - 1]:
        out = _poly_mul(out, [1] * d, trunc)  # (1 - z^d)/(1 - z) = 1 + z + ... + z^{d-1}
    return out


def b_coeff(i: int, d: int, degrees) -> int:
    if d < 0:
        return 0
    s = b_series(i, degrees, d)
    return s[d]


def polys_bound(degrees, m: int | None = None, D: int | None = None) -> int:
    """Sum of all b_d^(i) up to D; (delta^m - 1)/(delta - 1) for uniform degree."""
    degs = _degree_list(degrees, m)
    D = macaulay_bound(degs) if D is None else D
    return sum(sum(b_series(i, degs, D)) for i in range(1, len(degs) + 1))


def nf5_terms(n: int, m: int | None, degrees, D: int | None = None) -> dict:
    """(i, d) -> b_d^(i) * C(i+d-1, d) * C(n+d-1, d) for d from d_1 to D."""
    degs = _degree_list(degrees, m)
    D = macaulay_bound(degs) if D is None else D
    lo = min(degs)
    out = {}
    for i in range(1, len(degs) + 1):
        b = b_series(i, degs, D)
        for d in range(lo, D + 1):
            if b[d]:
                out[(i, d)] = b[d] * comb(i + d - 1, d) * comb(n + d - 1, d)
    return out


def nf5_exact(n: int, m: int | None, degrees, D: int | None = None) -> int:
    """Bound on the multiplications of matrix-F5, as an exact integer."""
    return sum(nf5_terms(n, m, degrees, D).values())


def log2_int(x: int) -> float:
    """log2 of a positive (possibly huge) integer."""
    if x <= 0:
        raise ValueError("log2 of a nonpositive number")
    k = x.bit_length()
    if k <= 1000:
        return log2(x)
    shift = k - 64
    return log2(x >> shift) + shift


def lambda0(delta: int, tol: float = 1e-12) -> float:
    """Root in [(delta-1)/2, delta-1] of
    ((l+1)/l)^(2 delta) = 1 / (1 - delta((l+1)^2 - l^2)/((l+1)^3 - l^3))."""
    if delta < 2:
        raise ValueError("delta must be >= 2")

    def h(lam):
        ratio = delta * (2 * lam + 1) / (3 * lam * lam + 3 * lam + 1)
        return (1 - ratio) * math.exp(2 * delta * math.log1p(1 / lam)) - 1

    lo, hi = (delta - 1) / 2, float(delta - 1)
    hlo, hhi = h(lo), h(hi)
    if hlo == 0:
        return lo
    if hhi == 0:
        return hi
    if (hlo < 0) == (hhi < 0):
        raise ArithmeticError(f"no sign change on the bracket for delta={delta}")
    while hi - lo > tol * hi:
        mid = 0.5 * (lo + hi)
        hm = h(mid)
        if (hm < 0) == (hlo < 0):
            lo, hlo = mid, hm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def lambda0_residual(delta: int, lam: float) -> float:
    lhs = ((lam + 1) / lam) ** (2 * delta)
    rhs = 1 / (1 - delta * ((lam + 1) ** 2 - lam ** 2) / ((lam + 1) ** 3 - lam ** 3))
    return abs(lhs - rhs) / abs(rhs)


def bigB(delta: int) -> float:
    lam = lambda0(delta)
    num = math.expm1(2 * delta * math.log1p(1 / lam))
    den = 1 / lam ** 2 - 1 / (lam + 1) ** 2
    return num / den


def bigA(delta: int, ell: int = 0) -> float:
    lam = lambda0(delta)
    return (1 - 1 / delta) / (2 * math.pi) * ((1 + 1 / lam) ** 3 - 1) / (1 + lam) ** (1 + ell)


def log2_nf5_asymptotic(n: int, delta: int, ell: int = 0) -> float:
    return n * log2(bigB(delta)) + log2(n) + log2(bigA(delta, ell))


def nf5_asymptotic(n: int, delta: int, ell: int = 0) -> float:
    """Leading term B^n * n * A (may overflow to inf for large n)."""
    try:
        return 2.0 ** log2_nf5_asymptotic(n, delta, ell)
    except OverflowError:
        return math.inf


def baseline_exponent(delta: int, omega: float) -> float:
    """Per-variable exponent omega * log2(delta^delta / (delta-1)^(delta-1))."""
    return omega * (delta * log2(delta) - (delta - 1) * log2(delta - 1))


def log2_baseline_cost(n: int, m: int, delta: int, omega: float) -> float:
    """log2 of m * D * C(n+D-1, D)^omega with D the Macaulay bound."""
    D = m * (delta - 1) + 1
    return log2(m) + log2(D) + omega * log2_int(comb(n + D - 1, D))


def baseline_cost(n: int, m: int, delta: int, omega: float) -> float:
    try:
        return 2.0 ** log2_baseline_cost(n, m, delta, omega)
    except OverflowError:
        return math.inf


_BERNOULLI_TERMS = (1 / 6, -1 / 30, 1 / 42, -1 / 30)  # B2, B4, B6, B8


def digamma(x: float) -> float:
    """psi(x) for x > 0: shift up to x >= 10, then the asymptotic series."""
    if x <= 0:
        raise ValueError("digamma is only implemented for x > 0")
    acc = 0.0
    while x < 10:
        acc -= 1 / x
        x += 1
    s = log(x) - 1 / (2 * x)
    x2 = x * x
    xp = x2
    for k, b in enumerate(_BERNOULLI_TERMS, start=1):
        s -= b / (2 * k * xp)
        xp *= x2
    return s + acc


def _g(logr: float, delta: int) -> float:
    """delta/(1 - r^-delta) - 1/(1 - r^-1) as a function of log r."""
    if abs(logr) < 1e-5:
        return (delta - 1) / 2 + (delta * delta - 1) * logr / 12
    return delta / -math.expm1(-delta * logr) - 1 / -math.expm1(-logr)


def r_of(m: int, d: float, delta: int) -> float:
    """r(m, d): solves (d - delta)/(m - 1) = delta/(1-r^-delta) - 1/(1-r^-1)."""
    target = (d - delta) / (m - 1)
    if not 0 < target < delta - 1:
        raise ValueError(f"d={d} outside the range where r(m, d) exists")
    lo, hi = -60.0, 60.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _g(mid, delta) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-14:
            break
    return math.exp(0.5 * (lo + hi))


def solve_d_rho(m: int, delta: int, tol: float = 1e-10, max_iter: int = 500):
    """Most expensive degree d(m) and rho(m) = r(m, d(m)); returns (d, rho, d/m)."""
    if m < 2 or delta < 2:
        raise ValueError("need m >= 2 and delta >= 2")
    D = (m - 1) * (delta - 1) + 1

    def F(d):
        return 2 * (digamma(d + m) - digamma(d + 1)) - log(r_of(m, d, delta))

    # (d - delta)/(m - 1) must stay inside (0, delta - 1)
    upper = delta + (m - 1) * (delta - 1)
    lo = delta + 1e-9 * (upper - delta)
    hi = min(float(D), upper - 1e-9 * (upper - delta))
    flo, fhi = F(lo), F(hi)
    if (flo < 0) == (fhi < 0):
        raise ArithmeticError(f"no root of the degree equation for m={m}, delta={delta}")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fm = F(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo < tol * hi:
            d = 0.5 * (lo + hi)
            return d, r_of(m, d, delta), d / m
    raise ArithmeticError("degree equation did not converge")


def _log_binom(a: float, b: float) -> float:
    return lgamma(a + 1) - lgamma(b + 1) - lgamma(a - b + 1)


def log2_nf5_capped_bound(m: int, delta: int, ell: int = 0) -> float:
    d, rho, _ = solve_d_rho(m, delta)
    D = (m - 1) * (delta - 1) + 1
    lr = log(rho)
    # B_m(rho) = rho^delta * ((1 - rho^delta)/(1 - rho))^(m-1)
    if abs(lr) < 1e-12:
        log_geo = log(delta)
    else:
        log_geo = log(math.expm1(delta * lr) / math.expm1(lr))
    log_b = delta * lr + (m - 1) * log_geo
    total = (log(m) + log(D) + log_b - d * lr
             + _log_binom(m + d - 1, d) + _log_binom(m + ell + d - 1, d))
    return total / log(2)


def nf5_capped_bound(m: int, delta: int, ell: int = 0) -> float:
    """m * D * B_m(rho)/rho^d * C(m+d-1, d) * C(m+ell+d-1, d) at (d(m), rho(m))."""
    try:
        return 2.0 ** log2_nf5_capped_bound(m, delta, ell)
    except OverflowError:
        return math.inf


@dataclass
class BoundReport:
    delta: int
    n: int
    ell: int
    D: int
    nf5_exact: int
    log2_nf5_exact: float
    log2_nf5_asymptotic: float
    lambda0: float
    log2_B: float
    A: float
    polys_bound: int
    baseline_exponents: dict = field(default_factory=dict)

    def as_dict(self):
        out = asdict(self)
        out["nf5_exact"] = str(self.nf5_exact)
        return out

    def csv_row(self) -> list:
        return [self.delta, self.n, self.ell, self.D, f"{self.log2_nf5_exact:.4f}",
                f"{self.log2_nf5_asymptotic:.4f}", f"{self.lambda0:.9f}", f"{self.log2_B:.9f}",
                f"{self.A:.6g}"] + [f"{v:.4f}" for v in self.baseline_exponents.values()]

    @staticmethod
    def csv_header(omegas=OMEGAS) -> list:
        return (["delta", "n", "ell", "D", "log2_nf5_exact", "log2_nf5_asym", "lambda0",
                 "log2_B", "A"] + [f"baseline_exp_w{w:.4g}" for w in omegas])


def report(delta: int, n: int, ell: int = 0, omegas=OMEGAS) -> BoundReport:
    """Bounds for m = n - ell equations of degree delta in n variables."""
    m = n - ell
    if m < 1:
        raise ValueError("need n > ell")
    degs = [delta] * m
    D = macaulay_bound(degs)
    exact = nf5_exact(n, m, degs, D)
    lam = lambda0(delta)
    return BoundReport(
        delta=delta, n=n, ell=ell, D=D, nf5_exact=exact, log2_nf5_exact=log2_int(exact),
        log2_nf5_asymptotic=log2_nf5_asymptotic(n, delta, ell), lambda0=lam,
        log2_B=log2(bigB(delta)), A=bigA(delta, ell), polys_bound=polys_bound(degs),
        baseline_exponents={f"{w:.4g}": baseline_exponent(delta, w) for w in omegas},
    )
