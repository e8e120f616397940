"""Sparse Laurent polynomials over the integers, i.e. the ring Z[t, t^-1].

A polynomial is an immutable map ``exponent -> coefficient`` with zero
coefficients stripped, so structural equality is mathematical equality.
Coefficients are plain Python ints (arbitrary precision).
"""

from __future__ import annotations

import functools
from typing import Iterable, Mapping, Union

from .errors import NotDivisible, PolySyntaxError

PolyLike = Union["LaurentPoly", int]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        acc: dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, (dict, Mapping)) else terms
            for e, c in items:
                acc[e] = acc.get(e, 0) + c
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e]}
        self._hash = None

    @classmethod
    def _canon(cls, acc: dict[int, int]) -> LaurentPoly:
        # acc is owned by the caller and not reused
        obj = object.__new__(cls)
        obj._terms = {e: acc[e] for e in sorted(acc) if acc[e]}
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def coerce(cls, value: PolyLike) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls({0: value})
        if isinstance(value, str):
            return parse_poly(value)
        raise TypeError(f"cannot interpret {value!r} as a Laurent polynomial")

    # -- inspection --------------------------------------------------------

    def items(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        return self._terms.items()

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    @property
    def degree(self) -> int | None:
        return next(reversed(self._terms)) if self._terms else None

    @property
    def valuation(self) -> int | None:
        return next(iter(self._terms)) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_polynomial(self) -> bool:
        """True when no negative exponent occurs."""
        return not self._terms or self.valuation >= 0

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly._canon(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._canon({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly._canon(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only unit monomials have negative powers in Z[t, t^-1]")
            (e, c), = self._terms.items()
            return LaurentPoly({e * k: c ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly('{format_poly(self)}')"


ZERO = LaurentPoly()
ONE = LaurentPoly.monomial(1)
T = LaurentPoly.monomial(1, 1)
T_INV = LaurentPoly.monomial(1, -1)
ONE_MINUS_T = ONE - T


def eval_at_one(p: LaurentPoly) -> int:
    """The augmentation t -> 1: the sum of all coefficients."""
    return p.eval_at_one()


def divide_by_one_minus_t(p: LaurentPoly) -> LaurentPoly:
    """Exact quotient q with (1 - t) q = p.

    Comparing coefficients of (1 - t) q = p gives q_e = p_e + q_{e-1},
    so q is the running sum of the coefficients of p.
    """
    if p.eval_at_one() != 0:
        raise NotDivisible(f"{p} is not divisible by 1-t (value at t=1 is {p.eval_at_one()})")
    if p.is_zero():
        return ZERO
    q = {}
    running = 0
    for e in range(p.valuation, p.degree):
        running += p.coeff(e)
        q[e] = running
    return LaurentPoly(q)


def poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Division with remainder in Z[t] by a divisor whose leading coefficient is +-1."""
    if not (a.is_polynomial() and b.is_polynomial()):
        raise ValueError("poly_divmod works on ordinary polynomials only")
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    s = b.degree
    lead = b.coeff(s)
    if lead not in (1, -1):
        raise ValueError(f"leading coefficient of {b} is not a unit")
    rem = dict(a.items())
    quot: dict[int, int] = {}
    low = list(b.items())[:-1]
    for d in range(a.degree if a else -1, s - 1, -1):
        c = rem.pop(d, 0)
        if not c:
            continue
        q = c * lead
        quot[d - s] = q
        for e, cb in low:
            k = e + d - s
            rem[k] = rem.get(k, 0) - q * cb
    return LaurentPoly(quot), LaurentPoly(rem)


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    q, r = poly_divmod(a, b)
    if r:
        raise NotDivisible(f"{b} does not divide {a}")
    return q


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@functools.lru_cache(maxsize=None)
def cyclotomic(k: int) -> LaurentPoly:
    """The k-th cyclotomic polynomial, as (t^k - 1) / prod_{d | k, d < k} Phi_d."""
    if k < 1:
        raise ValueError("cyclotomic polynomials are indexed by k >= 1")
    num = LaurentPoly({k: 1, 0: -1})
    for d in divisors(k)[:-1]:
        num = exact_div(num, cyclotomic(d))
    return num


def symmetric_poly(n: int) -> LaurentPoly:
    """1 + t + ... + t^(n-1)."""
    return LaurentPoly({r: 1 for r in range(n)})


def reductive_poly(m: int) -> LaurentPoly:
    """(1 - t)^(m-1)."""
    return ONE_MINUS_T ** (m - 1)


def factor_symmetric_poly(n: int) -> list[LaurentPoly]:
    """[Phi_k for k | n, k > 1], whose product is 1 + t + ... + t^(n-1)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return [cyclotomic(k) for k in divisors(n) if k > 1]


def product(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    result = ONE
    for p in polys:
        result = result * p
    return result


# -- text syntax -------------------------------------------------------------

def format_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for e, c in p.items():
        if e == 0:
            piece = str(c)
        else:
            var = "t" if e == 1 else f"t^{e}"
            piece = var if c == 1 else "-" + var if c == -1 else f"{c}{var}"
        if out and not piece.startswith("-"):
            piece = "+" + piece
        out.append(piece)
    return "".join(out)


def parse_poly(text: str) -> LaurentPoly:
    """Parse e.g. ``1 - t + 2t^3`` or ``t^-1``; whitespace is ignored."""
    s = "".join(text.split())
    if not s:
        raise PolySyntaxError("empty polynomial")
    terms: dict[int, int] = {}
    i = 0
    n = len(s)
    first = True
    while i < n:
        start = i
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        elif not first:
            raise PolySyntaxError(f"expected '+' or '-' at position {i} in {text!r}")
        j = i
        while j < n and s[j].isdigit():
            j += 1
        coeff = int(s[i:j]) if j > i else None
        i = j
        exp = 0
        if i < n and s[i] == "*":
            i += 1
            if i >= n or s[i] != "t":
                raise PolySyntaxError(f"expected 't' after '*' at position {i} in {text!r}")
        if i < n and s[i] == "t":
            i += 1
            exp = 1
            if i < n and s[i] == "^":
                i += 1
                paren = i < n and s[i] == "("
                if paren:
                    i += 1
                j = i
                if j < n and s[j] in "+-":
                    j += 1
                k = j
                while k < n and s[k].isdigit():
                    k += 1
                if k == j:
                    raise PolySyntaxError(f"missing exponent at position {i} in {text!r}")
                exp = int(s[i:k])
                i = k
                if paren:
                    if i >= n or s[i] != ")":
                        raise PolySyntaxError(f"unclosed '(' in exponent of {text!r}")
                    i += 1
        elif coeff is None:
            raise PolySyntaxError(f"unexpected character at position {start} in {text!r}")
        if coeff is None:
            coeff = 1
        terms[exp] = terms.get(exp, 0) + sign * coeff
        first = False
    return LaurentPoly(terms)
