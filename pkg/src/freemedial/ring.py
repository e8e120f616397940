"""Coefficient rings: the Laurent ring Z[t, t^-1] and quotients Z[t]/f.

A quotient modulus must have constant and leading coefficient in {+1, -1};
then t is a unit and every Laurent polynomial has a unique representative of
degree below deg f with no negative exponents.  An optional characteristic
``n > 0`` additionally reduces coefficients modulo n (used for Z_n, i.e.
the ideal generated by 1 + ... + t^(n-1) and 1 - t together).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import BadModulus, FactorMismatch, NotQuotient, SpecMismatch
from .poly import ONE, T, T_INV, ZERO, LaurentPoly, parse_poly, poly_divmod, product


@dataclass(frozen=True, eq=False)
class RingSpec:
    modulus: LaurentPoly | None = None
    characteristic: int = 0

    def __post_init__(self):
        f = self.modulus
        if f is None:
            if self.characteristic:
                raise BadModulus("the Laurent ring has characteristic 0")
            return
        if not f.is_polynomial():
            raise BadModulus(f"modulus {f} has negative exponents")
        if f.degree is None or f.degree < 1:
            raise BadModulus(f"modulus {f} must have degree >= 1")
        if f.coeff(0) not in (1, -1) or f.coeff(f.degree) not in (1, -1):
            raise BadModulus(f"modulus {f} needs constant and leading coefficients in {{1, -1}}")
        if self.characteristic < 0:
            raise BadModulus("characteristic must be non-negative")

    @classmethod
    def laurent(cls) -> RingSpec:
        return cls()

    @classmethod
    def quotient(cls, f, characteristic: int = 0) -> RingSpec:
        if isinstance(f, str):
            f = parse_poly(f)
        return cls(LaurentPoly.coerce(f), characteristic)

    @property
    def kind(self) -> str:
        return "laurent" if self.modulus is None else "quotient"

    @property
    def is_laurent(self) -> bool:
        return self.modulus is None

    @property
    def degree(self) -> int | None:
        return None if self.modulus is None else self.modulus.degree

    def __call__(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.spec != self:
                raise SpecMismatch(f"element of {value.spec} used in {self}")
            return value
        return reduce(LaurentPoly.coerce(value), self)

    @functools.cached_property
    def zero(self) -> RingElement:
        return RingElement(self, ZERO)

    @functools.cached_property
    def one(self) -> RingElement:
        return reduce(ONE, self)

    @functools.cached_property
    def t(self) -> RingElement:
        return reduce(T, self)

    @functools.cached_property
    def one_minus_t(self) -> RingElement:
        return reduce(ONE - T, self)

    @functools.cached_property
    def t_inverse(self) -> RingElement:
        if self.is_laurent:
            return RingElement(self, T_INV)
        return inv_t(self)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RingSpec):
            return NotImplemented
        return self.modulus == other.modulus and self.characteristic == other.characteristic

    def __hash__(self):
        return hash((self.modulus, self.characteristic))

    def __str__(self):
        if self.modulus is None:
            return "laurent"
        if self.characteristic:
            return f"mod {self.modulus} over Z_{self.characteristic}"
        return f"mod {self.modulus}"


@dataclass(frozen=True)
class RingElement:
    """A canonical (fully reduced) element of the ring described by ``spec``.

    Build these through ``spec(value)`` or :func:`reduce`; the constructor
    itself trusts that ``value`` is already reduced.
    """

    spec: RingSpec
    value: LaurentPoly

    def _other(self, other) -> RingElement:
        if isinstance(other, RingElement):
            if other.spec != self.spec:
                raise SpecMismatch(f"{self.spec} vs {other.spec}")
            return other
        if isinstance(other, (int, LaurentPoly)):
            return self.spec(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return reduce(-self.value, self.spec)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        base = self
        if k < 0:
            if self.value != T:
                raise ValueError("negative powers are supported for t only")
            base = self.spec.t_inverse
            k = -k
        result = self.spec.one
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"RingElement('{self.value}' in {self.spec})"


RingLike = Union[RingElement, LaurentPoly, int]


def add(a: RingElement, b: RingElement) -> RingElement:
    if a.spec != b.spec:
        raise SpecMismatch(f"{a.spec} vs {b.spec}")
    return reduce(a.value + b.value, a.spec)


def mul(a: RingElement, b: RingElement) -> RingElement:
    if a.spec != b.spec:
        raise SpecMismatch(f"{a.spec} vs {b.spec}")
    return reduce(a.value * b.value, a.spec)


@functools.lru_cache(maxsize=256)
def inv_t(spec: RingSpec) -> RingElement:
    """t^-1 in Z[t]/f, equal to -(c_1 + c_2 t + ... + c_s t^(s-1)) / c_0."""
    if spec.is_laurent:
        raise NotQuotient("t^-1 needs no computation in the Laurent ring")
    f = spec.modulus
    c0 = f.coeff(0)
    tail = LaurentPoly({e - 1: c for e, c in f.items() if e >= 1})
    return _reduce_poly(-tail * c0, spec)


def _reduce_poly(p: LaurentPoly, spec: RingSpec) -> RingElement:
    if p.degree is not None and p.degree >= spec.degree:
        p = poly_divmod(p, spec.modulus)[1]
    n = spec.characteristic
    if n:
        p = LaurentPoly({e: c % n for e, c in p.items()})
    return RingElement(spec, p)


def reduce(p: LaurentPoly, spec: RingSpec) -> RingElement:
    """Canonical representative of p in the ring ``spec``.

    Negative exponents go first (multiplying by powers of t^-1), then the
    degree is brought below deg f.
    """
    if spec.is_laurent:
        return RingElement(spec, p)
    if p.is_zero():
        return RingElement(spec, ZERO)
    low = p.valuation
    if low >= 0:
        return _reduce_poly(p, spec)
    result = _reduce_poly(p.shift(-low), spec)
    t_inv = inv_t(spec).value
    for _ in range(-low):
        result = _reduce_poly(result.value * t_inv, spec)
    return result


def crt_residues(a: RingElement, factors: Sequence[LaurentPoly]) -> list[RingElement]:
    """Images of a under Z[t]/f -> Z[t]/f_j for a factorisation f = prod f_j."""
    spec = a.spec
    if spec.is_laurent:
        raise NotQuotient("residues need a quotient ring")
    if product(factors) != spec.modulus:
        raise FactorMismatch(f"product of factors is not {spec.modulus}")
    return [reduce(a.value, RingSpec(f, spec.characteristic)) for f in factors]
