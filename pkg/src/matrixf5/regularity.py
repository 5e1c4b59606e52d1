"""Regular sequences, Noether position and random test systems.

Regularity is decided from Hilbert functions alone: a homogeneous sequence
of degrees d_1..d_m is regular exactly when its Hilbert series equals
prod(1 - z^d_j) / (1 - z)^n.  For m = n that series is a polynomial, and
comparing up to the Macaulay bound sum(d_j - 1) + 1 certifies it.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .field import DEFAULT_PRIME, PrimeField, rank
from .macaulay import hilbert_function, hilbert_series
from .monomial import Monomial, count, enumerate_monomials
from .polynomial import Polynomial


class RegularityError(RuntimeError):
    """No suitable system or change of variables was found."""


class HilbertSeries:
    """Truncated power series with integer coefficients."""

    def __init__(self, coefficients, trunc: int | None = None):
        coeffs = [int(c) for c in coefficients]
        self.trunc = len(coeffs) - 1 if trunc is None else trunc
        coeffs = coeffs[: self.trunc + 1]
        coeffs += [0] * (self.trunc + 1 - len(coeffs))
        self.coefficients = coeffs

    def __getitem__(self, d):
        return self.coefficients[d]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, HilbertSeries):
            return self.coefficients == other.coefficients
        if isinstance(other, (list, tuple)):
            return self.coefficients == list(other)
        return NotImplemented

    def __repr__(self):
        return f"HilbertSeries({self.coefficients})"

    def to_str(self, var: str = "z") -> str:
        parts = []
        for d, c in enumerate(self.coefficients):
            if c:
                parts.append(str(c) if d == 0 else f"{c}*{var}^{d}" if d > 1 else f"{c}*{var}")
        return " + ".join(parts) + f" + O({var}^{self.trunc + 1})" if parts else f"O({var}^{self.trunc + 1})"


def regular_series(degrees, n: int, trunc: int) -> HilbertSeries:
    """prod_j (1 - z^{d_j}) / (1 - z)^n expanded up to z^trunc."""
    if trunc < 0:
        raise ValueError("trunc must be >= 0")
    coeffs = [count(n, d) for d in range(trunc + 1)]
    for dj in degrees:
        for d in range(trunc, dj - 1, -1):
            coeffs[d] -= coeffs[d - dj]
    return HilbertSeries(coeffs, trunc)


def macaulay_bound(degrees) -> int:
    return sum(d - 1 for d in degrees) + 1


def system_degrees(system) -> list[int]:
    return [f.degree for f in system]


def hilbert_of(system, trunc: int, method: str = "quotient", n: int | None = None) -> HilbertSeries:
    """Hilbert function of the ideal of ``system`` up to ``trunc``."""
    if method == "quotient":
        return HilbertSeries(hilbert_series(system, trunc, n=n), trunc)
    if method == "rank":
        return HilbertSeries([hilbert_function(system, d, n=n) for d in range(trunc + 1)], trunc)
    raise ValueError(f"unknown method {method!r}")


def first_discrepancy(system, up_to: int | None = None, method: str = "quotient") -> int | None:
    """Smallest degree where the Hilbert function leaves the regular one."""
    if not system:
        return None
    degs = system_degrees(system)
    up_to = macaulay_bound(degs) if up_to is None else up_to
    n = system[0].n
    got = hilbert_of(system, up_to, method)
    want = regular_series(degs, n, up_to)
    for d in range(up_to + 1):
        if got[d] != want[d]:
            return d
    return None


def is_regular(system, up_to: int | None = None, method: str = "quotient") -> bool:
    """Hilbert function equals the regular one for every d <= up_to
    (default: the Macaulay bound of the sequence)."""
    if not system:
        return True
    if any(not f for f in system):
        return False
    if len(system) > system[0].n:
        return False
    return first_discrepancy(system, up_to, method) is None


def restrict(system, i: int) -> list[Polynomial]:
    """Set x_{i+1}, ..., x_n to zero and drop those variables."""
    out = []
    for f in system:
        terms = {Monomial(m[:i]): c for m, c in f.terms.items() if not any(m[i:])}
        out.append(Polynomial(terms, i, f.field, f.names[:i]))
    return out


def is_noether_position(system, i: int, method: str = "quotient") -> bool:
    """Whether (f_1, ..., f_i, x_{i+1}, ..., x_n) is a regular sequence.

    The linear forms can be moved to the front of a homogeneous regular
    sequence, and modding them out is the same as setting the variables to
    zero, so the test runs on f_1..f_i restricted to x_1..x_i.
    """
    if not system:
        return True
    n = system[0].n
    if not 0 <= i <= len(system):
        raise ValueError(f"need 0 <= i <= m, got {i}")
    if i > n:
        return False
    if i == 0:
        return True
    sub = restrict(system[:i], i)
    if any(not f for f in sub):
        return False
    return is_regular(sub, macaulay_bound(system_degrees(system[:i])), method)


def is_snp(system, method: str = "quotient") -> bool:
    """Simultaneous Noether position: Noether position for every prefix."""
    return all(is_noether_position(system, i, method) for i in range(1, len(system) + 1))


@dataclass(frozen=True)
class SystemSpec:
    n: int
    m: int
    degrees: tuple
    p: int = DEFAULT_PRIME
    seed: int = 0

    def __post_init__(self):
        degs = tuple(int(d) for d in self.degrees)
        if len(degs) == 1 and self.m > 1:
            degs = degs * self.m
        object.__setattr__(self, "degrees", degs)
        if not 1 <= self.m <= self.n:
            raise ValueError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")
        if len(degs) != self.m:
            raise ValueError("one degree per polynomial is required")
        if any(d < 1 for d in degs):
            raise ValueError("degrees must be positive")
        if list(degs) != sorted(degs):
            raise ValueError("degrees must be sorted ascending")
        PrimeField(self.p)

    @classmethod
    def uniform(cls, n: int, delta: int, m: int | None = None, p: int = DEFAULT_PRIME, seed: int = 0):
        m = n if m is None else m
        return cls(n, m, (delta,) * m, p, seed)


def gen_system(spec: SystemSpec, names=None) -> list[Polynomial]:
    """Dense homogeneous polynomials with uniform coefficients in [0, p)."""
    rng = np.random.default_rng(spec.seed)
    field = PrimeField(spec.p)
    out = []
    for d in spec.degrees:
        mons = enumerate_monomials(spec.n, d)
        coeffs = rng.integers(0, spec.p, size=len(mons))
        out.append(Polynomial(dict(zip(mons, coeffs.tolist())), spec.n, field, names))
    return out


def linear_substitution(system, matrix) -> list[Polynomial]:
    """x_j -> sum_k matrix[j][k] x_k applied to every polynomial."""
    if not system:
        return []
    n, field, names = system[0].n, system[0].field, system[0].names
    A = np.asarray(matrix, dtype=np.int64) % field.p
    images = []
    for j in range(n):
        terms = {Monomial.var(k + 1, n): int(A[j, k]) for k in range(n)}
        images.append(Polynomial(terms, n, field, names))
    return [f.substitute(images).with_names(names) for f in system]


def random_invertible(n: int, p: int, rng) -> np.ndarray:
    while True:
        A = rng.integers(0, p, size=(n, n))
        if rank(A, p) == n:
            return A


def random_change_of_vars(system, seed: int = 0, attempts: int = 10, matrix=None,
                          check=is_snp):
    """Apply random invertible linear substitutions until ``check`` passes.

    With ``matrix`` given, that substitution is applied once and returned
    without checking.  Raises RuntimeError once the attempt limit is hit.
    """
    if not system:
        return []
    if matrix is not None:
        return linear_substitution(system, matrix)
    n, p = system[0].n, system[0].p
    maxdeg = max(f.degree for f in system)
    if p < 10 * n * maxdeg:
        warnings.warn(f"p={p} is small for a random change of {n} variables", stacklevel=2)
    for attempt in range(attempts):
        rng = np.random.default_rng([seed, attempt])
        A = random_invertible(n, p, rng)
        out = linear_substitution(system, A)
        if check(out):
            return out
    raise RegularityError(f"no good change of variables after {attempts} attempts")
