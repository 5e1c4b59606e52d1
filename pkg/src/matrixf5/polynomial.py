"""Sparse multivariate polynomials over GF(p).

A polynomial is a map from :class:`Monomial` to a nonzero residue.  The
text format is the usual one, e.g. ``x^2 + y^2 - 2*x*z``.
"""

from __future__ import annotations

import re
from typing import NamedTuple

import numpy as np

from .field import DEFAULT_PRIME, PrimeField
from .monomial import Monomial, divides, enumerate_monomials, grevlex_key, index_map, quotient


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text = text
        self.pos = pos
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{message}{where}")


class Term(NamedTuple):
    monomial: Monomial
    coefficient: int


def default_names(n: int) -> list[str]:
    return [f"x{k + 1}" for k in range(n)]


class Polynomial:
    """Immutable sparse polynomial in n variables over GF(p)."""

    __slots__ = ("terms", "n", "field", "names")

    def __init__(self, terms: dict, n: int, field: PrimeField | int = DEFAULT_PRIME, names=None):
        if not isinstance(field, PrimeField):
            field = PrimeField(field)
        p = field.p
        clean = {}
        for m, c in terms.items():
            c = int(c) % p
            if c:
                m = m if isinstance(m, Monomial) else Monomial(m)
                if len(m) != n:
                    raise ValueError(f"monomial {tuple(m)} is not in {n} variables")
                clean[m] = c
        self.terms = clean
        self.n = n
        self.field = field
        self.names = list(names) if names is not None else default_names(n)

    # construction helpers

    @classmethod
    def zero(cls, n: int, field=DEFAULT_PRIME, names=None) -> Polynomial:
        return cls({}, n, field, names)

    @classmethod
    def monomial(cls, m, coeff: int = 1, field=DEFAULT_PRIME, names=None) -> Polynomial:
        return cls({Monomial(m): coeff}, len(m), field, names)

    def _new(self, terms) -> Polynomial:
        out = object.__new__(Polynomial)
        out.terms = terms
        out.n = self.n
        out.field = self.field
        out.names = self.names
        return out

    @property
    def p(self) -> int:
        return self.field.p

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(m.degree for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def sorted_terms(self) -> list[Term]:
        """Terms in decreasing grevlex order."""
        mons = sorted(self.terms, key=grevlex_key, reverse=True)
        return [Term(m, self.terms[m]) for m in mons]

    def leading_term(self) -> Term:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        m = max(self.terms, key=grevlex_key)
        return Term(m, self.terms[m])

    def leading_monomial(self) -> Monomial:
        return self.leading_term().monomial

    def coefficient(self, m) -> int:
        return self.terms.get(Monomial(m), 0)

    # arithmetic

    def _check(self, other: Polynomial):
        if other.n != self.n or other.field != self.field:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        p = self.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return self._new(out)

    def __neg__(self) -> Polynomial:
        p = self.p
        return self._new({m: p - c for m, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def scale(self, c: int) -> Polynomial:
        c = int(c) % self.p
        if c == 0:
            return self._new({})
        p = self.p
        return self._new({m: v * c % p for m, v in self.terms.items()})

    def mul_term(self, m, c: int = 1) -> Polynomial:
        """c * m * self."""
        c = int(c) % self.p
        if c == 0:
            return self._new({})
        p = self.p
        m = tuple(m)
        return self._new({Monomial(tuple(a + b for a, b in zip(k, m))): v * c % p
                          for k, v in self.terms.items()})

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        p = self.p
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = Monomial(tuple(a + b for a, b in zip(m1, m2)))
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return self._new({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_term().coefficient))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.p, frozenset(self.terms.items())))

    def substitute(self, images: list[Polynomial]) -> Polynomial:
        """Replace x_j by images[j-1] (e.g. a linear change of variables)."""
        if len(images) != self.n:
            raise ValueError("need one image per variable")
        n_out = images[0].n if images else 0
        out = Polynomial.zero(n_out, self.field, images[0].names if images else None)
        powers: dict = {}
        one = Polynomial.monomial((0,) * n_out, 1, self.field, out.names)

        def power(j, e):
            key = (j, e)
            if key not in powers:
                powers[key] = one if e == 0 else power(j, e - 1) * images[j]
            return powers[key]

        for m, c in self.terms.items():
            t = one.scale(c)
            for j, e in enumerate(m):
                if e:
                    t = t * power(j, e)
            out = out + t
        return out

    def homogenize(self, name: str = "h") -> Polynomial:
        """Add a trailing variable and homogenize to the total degree."""
        d = self.degree
        terms = {Monomial(tuple(m) + (d - m.degree,)): c for m, c in self.terms.items()}
        return Polynomial(terms, self.n + 1, self.field, self.names + [name])

    def with_names(self, names) -> Polynomial:
        out = self._new(self.terms)
        out.names = list(names)
        return out

    # dense rows

    def to_vector(self, d: int) -> np.ndarray:
        """Coefficient vector over T_d in decreasing grevlex order."""
        idx = index_map(self.n, d)
        v = np.zeros(len(idx), dtype=np.int64)
        for m, c in self.terms.items():
            if m.degree != d:
                raise ValueError(f"term of degree {m.degree} in a degree-{d} vector")
            v[idx[tuple(m)]] = c
        return v

    @classmethod
    def from_vector(cls, vec, n: int, d: int, field=DEFAULT_PRIME, names=None) -> Polynomial:
        mons = enumerate_monomials(n, d)
        vec = np.asarray(vec)
        nz = np.flatnonzero(vec)
        return cls({mons[k]: int(vec[k]) for k in nz}, n, field, names)

    # text

    def to_str(self, names=None) -> str:
        names = names or self.names
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            c = self.field.symmetric(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mon = m.to_str(names)
            if mon == "1":
                body = str(a)
            elif a == 1:
                body = mon
            else:
                body = f"{a}*{mon}"
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    __str__ = to_str

    def __repr__(self):
        return f"Polynomial({self.to_str()!r}, p={self.p})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:  # only trailing whitespace left
            break
        if mt.group(1) is not None:
            out.append(("int", mt.group(1), mt.start(1)))
        elif mt.group(2) is not None:
            out.append(("name", mt.group(2), mt.start(2)))
        elif mt.group(3) is not None:
            out.append(("op", mt.group(3), mt.start(3)))
        pos = mt.end()
    out.append(("end", "", len(text)))
    return out


def parse(text: str, variables, p: int | PrimeField = DEFAULT_PRIME) -> Polynomial:
    """Parse ``text`` into a polynomial in the given ordered variables."""
    field = p if isinstance(p, PrimeField) else PrimeField(p)
    names = list(variables)
    pos_of = {name: k for k, name in enumerate(names)}
    if len(pos_of) != len(names):
        raise ValueError("duplicate variable names")
    n = len(names)
    toks = _tokens(text)
    k = 0
    terms: dict = {}

    def peek():
        return toks[k]

    def take():
        nonlocal k
        t = toks[k]
        k += 1
        return t

    def fail(msg, tok):
        raise ParseError(msg, text, tok[2])

    def factor(coeff, exps):
        tok = take()
        if tok[0] == "int":
            coeff *= int(tok[1])
            return coeff
        if tok[0] == "name":
            if tok[1] not in pos_of:
                fail(f"unknown variable {tok[1]!r}", tok)
            e = 1
            if peek()[:2] == ("op", "^"):
                take()
                et = take()
                if et[0] != "int":
                    fail("expected an exponent", et)
                e = int(et[1])
            exps[pos_of[tok[1]]] += e
            return coeff
        fail("expected a number or a variable", tok)

    sign_tok = peek()
    if sign_tok[0] == "end":
        fail("empty polynomial", sign_tok)
    first = True
    while True:
        tok = peek()
        sign = 1
        if tok[0] == "op" and tok[1] in "+-":
            take()
            sign = -1 if tok[1] == "-" else 1
        elif not first:
            fail("expected '+' or '-'", tok)
        first = False
        exps = [0] * n
        coeff = factor(sign, exps)
        while True:
            nxt = peek()
            if nxt[:2] == ("op", "*"):
                take()
                coeff = factor(coeff, exps)
            elif nxt[0] == "name" and toks[k - 1][0] == "int":
                coeff = factor(coeff, exps)  # "2x" means 2*x
            else:
                break
        m = Monomial(exps)
        terms[m] = (terms.get(m, 0) + coeff) % field.p
        if peek()[0] == "end":
            break
    return Polynomial(terms, n, field, names)


def normal_form(f: Polynomial, G: list[Polynomial]) -> Polynomial:
    """Fully reduce f by G; the divisor with smallest position in G wins."""
    divisors = [(g.leading_term(), g) for g in G if g]
    p = f.p
    work = dict(f.terms)
    rem: dict = {}
    while work:
        m = max(work, key=grevlex_key)
        c = work[m]
        for (lm, lc), g in divisors:
            if divides(lm, m):
                q = quotient(m, lm)
                factor = c * pow(lc, -1, p) % p
                for gm, gc in g.terms.items():
                    t = Monomial(tuple(a + b for a, b in zip(gm, q)))
                    v = (work.get(t, 0) - factor * gc) % p
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
                break
        else:
            rem[m] = c
            del work[m]
    return f._new(rem)
