"""Free medial quandles and free f-quandles on a finite generating set.

Points are pairs ``(a, i)`` where ``i`` is a generator and ``a`` lies in the
free module M = R^(X minus z) over the coefficient ring R (Z[t, t^-1] or a
quotient Z[t]/f).  The operation is

    (a, i) * (b, j) = ((1 - t) a + t b + e_i - e_j, j)

with e_z = 0 for the base generator z.  Displacements act by translation of
the coefficient vector, and ``(L_(0,i) L_(0,z)^-1)^f`` adds ``f e_i``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import ContextMismatch, NotInImage, NotInModel, UnsupportedIdeal, WrongContext
from .poly import (
    ONE_MINUS_T,
    LaurentPoly,
    divide_by_one_minus_t,
    parse_poly,
    poly_divmod,
    reductive_poly,
    symmetric_poly,
)
from .ring import RingElement, RingSpec, reduce

Vector = dict  # generator symbol -> RingElement


@dataclass(frozen=True)
class GeneratorSet:
    names: tuple[str, ...]
    base: str = None  # defaults to names[0]

    def __post_init__(self):
        names = tuple(str(x) for x in self.names)
        if not names:
            raise ValueError("a generator set needs at least one symbol")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator symbols in {names}")
        object.__setattr__(self, "names", names)
        base = names[0] if self.base is None else str(self.base)
        if base not in names:
            raise ValueError(f"base generator {base!r} is not one of {names}")
        object.__setattr__(self, "base", base)

    @classmethod
    def of(cls, spec) -> GeneratorSet:
        """Accept a GeneratorSet, an iterable of symbols, or a count (symbols 0..k-1)."""
        if isinstance(spec, GeneratorSet):
            return spec
        if isinstance(spec, int):
            return cls(tuple(str(i) for i in range(spec)))
        return cls(tuple(spec))

    @property
    def minus(self) -> tuple[str, ...]:
        """X without the base generator: the coordinates of M."""
        return tuple(x for x in self.names if x != self.base)

    def __contains__(self, name):
        return name in self.names

    def __len__(self):
        return len(self.names)


@dataclass(frozen=True)
class FreeQuandle:
    """The free (f-)quandle M x X over a ring; points are :class:`FreeElement`."""

    gens: GeneratorSet
    ring: RingSpec = field(default_factory=RingSpec.laurent)

    def __post_init__(self):
        object.__setattr__(self, "gens", GeneratorSet.of(self.gens))

    # -- vectors -----------------------------------------------------------

    def vector(self, coeffs: Mapping[str, object] | None = None) -> tuple:
        """Canonical sparse vector: ordered tuple of (symbol, nonzero RingElement)."""
        coeffs = coeffs or {}
        for k in coeffs:
            if k not in self.gens.minus:
                raise ContextMismatch(f"{k!r} is not a coordinate of M (base is {self.gens.base!r})")
        out = []
        for x in self.gens.minus:
            if x in coeffs:
                v = coeffs[x]
                v = self.ring(parse_poly(v) if isinstance(v, str) else v)
                if v:
                    out.append((x, v))
        return tuple(out)

    def basis(self, i: str) -> tuple:
        """e_i as a sparse vector (empty for the base generator)."""
        if i not in self.gens:
            raise ContextMismatch(f"unknown generator {i!r}")
        if i == self.gens.base:
            return ()
        return ((i, self.ring.one),)

    def _combine(self, *terms) -> tuple:
        """Sum of ``scalar * vector`` terms, scalars being RingElements.

        Accumulates unreduced polynomials and reduces each coordinate once.
        """
        acc: dict[str, LaurentPoly] = {}
        for scalar, vec in terms:
            s = scalar.value
            for k, v in vec:
                prod = s * v.value
                acc[k] = acc[k] + prod if k in acc else prod
        R = self.ring
        out = []
        for x in self.gens.minus:
            if x in acc:
                v = reduce(acc[x], R)
                if v:
                    out.append((x, v))
        return tuple(out)

    # -- elements ----------------------------------------------------------

    def element(self, coeffs: Mapping[str, object] | None, gen: str) -> FreeElement:
        if gen not in self.gens:
            raise ContextMismatch(f"unknown generator {gen!r}")
        return FreeElement(self, str(gen), self.vector(coeffs))

    def generator(self, name: str) -> FreeElement:
        return self.element(None, name)

    def generators(self) -> list[FreeElement]:
        return [self.generator(x) for x in self.gens.names]

    def random_element(self, rng: random.Random, max_degree: int = 4, max_coeff: int = 9) -> FreeElement:
        coeffs = {}
        for x in self.gens.minus:
            lo = 0 if not self.ring.is_laurent else -max_degree
            terms = {e: rng.randint(-max_coeff, max_coeff) for e in range(lo, max_degree + 1)
                     if rng.random() < 0.6}
            coeffs[x] = LaurentPoly(terms)
        return self.element(coeffs, rng.choice(self.gens.names))

    def _check(self, *elems):
        for p in elems:
            if p.ctx is not self and p.ctx != self:
                raise ContextMismatch(f"element of {p.ctx} used in {self}")

    # -- operations --------------------------------------------------------

    def star(self, p: FreeElement, q: FreeElement) -> FreeElement:
        self._check(p, q)
        R = self.ring
        coeffs = self._combine(
            (R.one_minus_t, p.coeffs),
            (R.t, q.coeffs),
            (R.one, self.basis(p.gen)),
            (-R.one, self.basis(q.gen)),
        )
        return FreeElement(self, q.gen, coeffs)

    def backslash(self, p: FreeElement, q: FreeElement) -> FreeElement:
        self._check(p, q)
        R = self.ring
        t_inv = R.t_inverse
        coeffs = self._combine(
            (R.one - t_inv, p.coeffs),
            (t_inv, q.coeffs),
            (t_inv, self.basis(q.gen)),
            (-t_inv, self.basis(p.gen)),
        )
        return FreeElement(self, q.gen, coeffs)

    def basis_displacement(self, i: str) -> Displacement:
        """L_(0,i) L_(0,z)^-1, which translates every point by e_i."""
        return Displacement(self, self.basis(i))

    def displacement(self, coeffs: Mapping[str, object] | None = None) -> Displacement:
        return Displacement(self, self.vector(coeffs))

    def __str__(self):
        return f"F({','.join(self.gens.names)}; {self.ring})"


@dataclass(frozen=True)
class FreeElement:
    ctx: FreeQuandle
    gen: str
    coeffs: tuple  # ((symbol, RingElement), ...) in coordinate order, zeros omitted

    def __mul__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.ctx.star(self, other)

    def ldiv(self, other: FreeElement) -> FreeElement:
        """self \\ other."""
        return self.ctx.backslash(self, other)

    @property
    def vector(self) -> dict:
        return dict(self.coeffs)

    def coeff(self, x: str) -> RingElement:
        return self.vector.get(x, self.ctx.ring.zero)

    def __str__(self):
        return f"({format_vector(self.coeffs)}, {self.gen})"

    def __repr__(self):
        return f"FreeElement{self}"

    def to_json(self) -> dict:
        return {
            "gen": self.gen,
            "coeffs": {x: str(v) for x, v in self.coeffs},
            "ring": str(self.ctx.ring),
            "gens": list(self.ctx.gens.names),
        }


@dataclass(frozen=True)
class Displacement:
    """An element of Dis(F), identified with its translation vector in M."""

    ctx: FreeQuandle
    vector: tuple

    def __call__(self, p: FreeElement) -> FreeElement:
        return displacement_apply(self, p)

    def __add__(self, other: Displacement) -> Displacement:
        """Composition (Dis(F) is abelian, written additively)."""
        if other.ctx != self.ctx:
            raise ContextMismatch("displacements from different quandles")
        one = self.ctx.ring.one
        return Displacement(self.ctx, self.ctx._combine((one, self.vector), (one, other.vector)))

    def __neg__(self) -> Displacement:
        return Displacement(self.ctx, self.ctx._combine((-self.ctx.ring.one, self.vector)))

    def power(self, f) -> Displacement:
        """alpha^f for a ring element (or polynomial) f; alpha^t is conjugation by L."""
        f = self.ctx.ring(f)
        return Displacement(self.ctx, self.ctx._combine((f, self.vector)))

    def is_identity(self) -> bool:
        return not self.vector


# -- module-level operations --------------------------------------------------

def star(p: FreeElement, q: FreeElement) -> FreeElement:
    if p.ctx != q.ctx:
        raise ContextMismatch("elements of different free quandles")
    return p.ctx.star(p, q)


def backslash(p: FreeElement, q: FreeElement) -> FreeElement:
    if p.ctx != q.ctx:
        raise ContextMismatch("elements of different free quandles")
    return p.ctx.backslash(p, q)


def displacement_apply(d: Displacement, p: FreeElement) -> FreeElement:
    if d.ctx != p.ctx:
        raise ContextMismatch("displacement and point live in different quandles")
    one = p.ctx.ring.one
    return FreeElement(p.ctx, p.gen, p.ctx._combine((one, p.coeffs), (one, d.vector)))


def displacement_of_pair(p: FreeElement, q: FreeElement) -> Displacement:
    """L_p L_q^-1 as the vector (1 - t)(a - b) + e_i - e_j."""
    if p.ctx != q.ctx:
        raise ContextMismatch("elements of different free quandles")
    ctx = p.ctx
    R = ctx.ring
    w = R.one_minus_t
    vec = ctx._combine(
        (w, p.coeffs), (-w, q.coeffs), (R.one, ctx.basis(p.gen)), (-R.one, ctx.basis(q.gen))
    )
    return Displacement(ctx, vec)


def decompose(p: FreeElement) -> list[tuple[str, RingElement]]:
    """The exponents f_i with p = prod_i (L_(0,i) L_(0,z)^-1)^(f_i) ((0, gen))."""
    return list(p.coeffs)


def recompose(ctx: FreeQuandle, word: Iterable[tuple[str, object]], gen: str) -> FreeElement:
    point = ctx.generator(gen)
    for i, f in word:
        point = ctx.basis_displacement(i).power(f)(point)
    return point


def decomposition_word(p: FreeElement) -> str:
    """Render the decomposition, e.g. ``(L_1 L_0^-1)(L_2 L_0^-1)^L (0,2)``."""
    z = p.ctx.gens.base
    parts = []
    for i, f in decompose(p):
        parts.append(f"(L_{i} L_{z}^-1){_exponent_suffix(f.value)}")
    return "".join(parts) + f" (0,{p.gen})"


def _exponent_suffix(f: LaurentPoly) -> str:
    if f == 1:
        return ""
    if len(f) == 1:
        (e, c), = f.items()
        if c == 1:
            return "^L" if e == 1 else f"^L^{e}"
    return "^(" + str(f).replace("t", "L") + ")"


def format_vector(coeffs) -> str:
    if not coeffs:
        return "0"
    out = []
    for x, v in coeffs:
        p = v.value
        if p == 1:
            piece = f"e_{x}"
        elif p == -1:
            piece = f"-e_{x}"
        elif len(p) == 1:
            piece = f"{p}·e_{x}"
        elif all(c < 0 for _, c in p.items()):
            piece = f"-({-p})·e_{x}"
        else:
            piece = f"({p})·e_{x}"
        if out:
            piece = " - " + piece[1:] if piece.startswith("-") else " + " + piece
        out.append(piece)
    return "".join(out)


# -- affine embedding ----------------------------------------------------------

def embed_affine(p: FreeElement) -> dict[str, RingElement]:
    """R_(0,z): p = (g, i) |-> (1 - t) g + e_i, a point of Aff(M, t).

    Every coordinate of M is present in the result (zeros included).
    """
    ctx = p.ctx
    R = ctx.ring
    vec = dict(ctx._combine((R.one_minus_t, p.coeffs), (R.one, ctx.basis(p.gen))))
    return {x: vec.get(x, R.zero) for x in ctx.gens.minus}


def affine_star(ring: RingSpec, a: Mapping[str, RingElement], b: Mapping[str, RingElement]) -> dict:
    """a * b = (1 - t) a + t b in Aff(M, t)."""
    w = ring.one_minus_t
    keys = list(dict.fromkeys([*a, *b]))
    return {k: w * a.get(k, ring.zero) + ring.t * b.get(k, ring.zero) for k in keys}


def augmentation(a: Mapping[str, RingElement]) -> dict[str, int]:
    """Lambda: coordinate-wise evaluation at t = 1."""
    return {x: v.value.eval_at_one() for x, v in a.items()}


def unembed_affine(a: Mapping[str, object], ctx: FreeQuandle) -> FreeElement:
    """Inverse of :func:`embed_affine` on its image.

    Over Z[t, t^-1] the image is {a : Lambda(a) = e_i}.  Over Z[t]/f with
    f(1) = N != 0, Lambda is only defined modulo |N|; a representative
    r = a - e_i with r(1) = h N is shifted by -h f so that 1 - t divides it.
    """
    R = ctx.ring
    vec = {x: R(parse_poly(v) if isinstance(v, str) else v) for x, v in a.items()}
    for x in vec:
        if x not in ctx.gens.minus:
            raise ContextMismatch(f"{x!r} is not a coordinate of M")
    vec = {x: vec.get(x, R.zero) for x in ctx.gens.minus}
    lam = augmentation(vec)
    if R.is_laurent:
        modulus = 0
    else:
        if R.characteristic:
            raise WrongContext("the affine embedding is not injective over Z_n")
        modulus = abs(R.modulus.eval_at_one())
        if modulus < 2:
            raise WrongContext(
                f"the affine embedding is not injective over {R} (f(1) = {R.modulus.eval_at_one()})"
            )
    gen = _image_generator(lam, ctx.gens, modulus)
    if gen is None:
        raise NotInImage(f"Lambda(a) = {tuple(lam.values())} is not a basis vector e_i")
    basis = dict(ctx.basis(gen))
    g = {}
    for x in ctx.gens.minus:
        r = vec[x] - basis.get(x, R.zero)
        p = r.value
        if modulus:
            h = p.eval_at_one() // R.modulus.eval_at_one()
            p = p - R.modulus * h
        g[x] = R(divide_by_one_minus_t(p))
    return ctx.element(g, gen)


def _image_generator(lam: Mapping[str, int], gens: GeneratorSet, modulus: int) -> str | None:
    def same(u, v):
        return u == v if not modulus else (u - v) % modulus == 0

    for i in gens.names:
        if all(same(lam[x], 1 if x == i else 0) for x in gens.minus):
            return i
    return None


# -- contexts for subvarieties ---------------------------------------------------

def medial_context(gens) -> FreeQuandle:
    return FreeQuandle(GeneratorSet.of(gens), RingSpec.laurent())


def make_f_quandle_context(gens, f) -> FreeQuandle:
    """Free f-quandle: same formula, arithmetic in Z[t]/f (raises BadModulus)."""
    if isinstance(f, str):
        f = parse_poly(f)
    return FreeQuandle(GeneratorSet.of(gens), RingSpec.quotient(f))


def symmetric_context(gens, n: int) -> FreeQuandle:
    if n < 2:
        raise ValueError("n-symmetric contexts need n >= 2")
    return make_f_quandle_context(gens, symmetric_poly(n))


def reductive_context(gens, m: int) -> FreeQuandle:
    if m < 2:
        raise ValueError("m-reductive contexts need m >= 2")
    return make_f_quandle_context(gens, reductive_poly(m))


def symmetric_reductive2_context(gens, n: int) -> FreeQuandle:
    """Free 2-reductive n-symmetric quandle: coefficients in Z_n, t = 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return FreeQuandle(GeneratorSet.of(gens), RingSpec.quotient(ONE_MINUS_T, characteristic=n))


def ideal_context(gens, polys: Sequence) -> FreeQuandle:
    """Context for the ideal generated by ``polys``.

    Supported: a single admissible polynomial, or the pair
    {1 + ... + t^(n-1), 1 - t}.
    """
    polys = [parse_poly(p) if isinstance(p, str) else LaurentPoly.coerce(p) for p in polys]
    if len(polys) == 1:
        return make_f_quandle_context(gens, polys[0])
    if len(polys) == 2:
        for a, b in (polys, polys[::-1]):
            if b in (ONE_MINUS_T, -ONE_MINUS_T):
                n = a.degree + 1 if a.degree is not None else 0
                if n >= 2 and a == symmetric_poly(n):
                    return symmetric_reductive2_context(gens, n)
    raise UnsupportedIdeal(f"ideal generated by {', '.join(map(str, polys))} is not supported")


# -- Joyce's model of free involutory medial quandles ------------------------------

def _check_joyce_vector(a: Sequence[int]):
    if sum(1 for x in a if x % 2) > 1:
        raise NotInModel(f"{tuple(a)} has more than one odd coordinate")


def joyce_model_star(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """a * b = 2a - b in Aff(Z^n, -1), restricted to at-most-one-odd tuples."""
    _check_joyce_vector(a)
    _check_joyce_vector(b)
    if len(a) != len(b):
        raise NotInModel("vectors of different lengths")
    return tuple(2 * x - y for x, y in zip(a, b))


def joyce_isomorphism(p: FreeElement) -> tuple[int, ...]:
    """(g, i) |-> 2g + e_i, the affine embedding specialised at t = -1."""
    R = p.ctx.ring
    if R.modulus != LaurentPoly({0: 1, 1: 1}) or R.characteristic:
        raise WrongContext(f"joyce_isomorphism needs the ring Z[t]/(1+t), not {R}")
    vec = p.vector
    out = []
    for x in p.ctx.gens.minus:
        g = vec[x].value.coeff(0) if x in vec else 0
        out.append(2 * g + (1 if x == p.gen else 0))
    return tuple(out)


# -- JSON ------------------------------------------------------------------------

def ring_from_text(text: str) -> RingSpec:
    """Inverse of ``str(RingSpec)``: ``laurent``, ``mod <f>`` or ``mod <f> over Z_<n>``."""
    text = text.strip()
    if text == "laurent":
        return RingSpec.laurent()
    if text.startswith("mod "):
        body = text[4:]
        char = 0
        if " over Z_" in body:
            body, char_text = body.split(" over Z_", 1)
            char = int(char_text)
        return RingSpec.quotient(parse_poly(body), char)
    raise ValueError(f"unknown ring {text!r}")


def element_from_json(data, gens=None) -> FreeElement:
    if isinstance(data, str):
        data = json.loads(data)
    names = data.get("gens", gens)
    if names is None:
        raise ValueError("generator list missing: add a 'gens' key or pass gens")
    ctx = FreeQuandle(GeneratorSet.of(names), ring_from_text(data.get("ring", "laurent")))
    return ctx.element(data.get("coeffs", {}), data["gen"])
