"""Quandle terms: parsing, normal forms in free (f-)quandles, identity decisions.

Grammar (``*`` and ``\\`` have equal precedence and associate to the left)::

    term := atom (("*" | "\\") atom)*
    atom := identifier | "(" term ")"

An identity holds in a variety iff both sides have the same normal form in
the free algebra of that variety over the variables of the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import TermSyntaxError, UnsupportedIdeal
from .free import (
    FreeElement,
    FreeQuandle,
    GeneratorSet,
    make_f_quandle_context,
    medial_context,
    reductive_context,
    symmetric_context,
    symmetric_reductive2_context,
)
from .poly import LaurentPoly, parse_poly, reductive_poly, symmetric_poly
from .ring import RingSpec


# -- AST -------------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Star:
    left: "Term"
    right: "Term"

    def __str__(self):
        return _show(self, "*")


@dataclass(frozen=True)
class Backslash:
    left: "Term"
    right: "Term"

    def __str__(self):
        return _show(self, "\\")


Term = Var | Star | Backslash


def _show(node, op: str) -> str:
    right = str(node.right)
    if not isinstance(node.right, Var):
        right = f"({right})"
    return f"{node.left} {op} {right}"


def variables(term: Term) -> list[str]:
    """Variables in order of first occurrence."""
    seen: dict[str, None] = {}
    stack = [term]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            seen.setdefault(node.name)
        else:
            stack.append(node.right)
            stack.append(node.left)
    return list(seen)


def rename(term: Term, mapping: dict[str, str]) -> Term:
    if isinstance(term, Var):
        return Var(mapping.get(term.name, term.name))
    return type(term)(rename(term.left, mapping), rename(term.right, mapping))


def size(term: Term) -> int:
    """Number of variable occurrences."""
    if isinstance(term, Var):
        return 1
    return size(term.left) + size(term.right)


# -- parser ----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[*\\()]))")


def _tokens(src: str) -> Iterator[tuple[str, str, int]]:
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            if src[pos:].strip() == "":
                break
            bad = pos + len(src[pos:]) - len(src[pos:].lstrip())
            raise TermSyntaxError(f"unexpected character {src[bad]!r}", bad)
        kind = "ident" if m.group("ident") else "op"
        yield kind, m.group(kind), m.start(kind)
        pos = m.end()
    yield "end", "", len(src)


def parse(src: str) -> Term:
    toks = list(_tokens(src))
    i = 0

    def atom():
        nonlocal i
        kind, text, pos = toks[i]
        if kind == "ident":
            i += 1
            return Var(text)
        if text == "(":
            i += 1
            node = term()
            kind, text, pos = toks[i]
            if text != ")":
                raise TermSyntaxError("expected ')'", pos)
            i += 1
            return node
        raise TermSyntaxError("expected a variable or '('" if kind != "end" else "unexpected end of input", pos)

    def term():
        nonlocal i
        node = atom()
        while toks[i][0] == "op" and toks[i][1] in ("*", "\\"):
            op = toks[i][1]
            i += 1
            rhs = atom()
            node = Star(node, rhs) if op == "*" else Backslash(node, rhs)
        return node

    result = term()
    kind, text, pos = toks[i]
    if kind != "end":
        raise TermSyntaxError(f"unexpected {text!r}", pos)
    return result


# -- varieties -------------------------------------------------------------------

@dataclass(frozen=True)
class VarietySpec:
    """medial | sym (n) | red (m) | symred2 (n) | mod (poly)."""

    kind: str
    n: int | None = None
    poly: LaurentPoly | None = None

    def __post_init__(self):
        if self.kind in ("sym", "red") and (self.n is None or self.n < 2):
            raise ValueError(f"{self.kind} varieties need a parameter >= 2")
        if self.kind == "symred2" and (self.n is None or self.n < 2):
            raise ValueError("sym:n+red:2 needs n >= 2")
        if self.kind == "mod":
            RingSpec.quotient(self.poly)  # validates the modulus
        if self.kind not in ("medial", "sym", "red", "symred2", "mod"):
            raise ValueError(f"unknown variety kind {self.kind!r}")

    @classmethod
    def medial(cls):
        return cls("medial")

    @classmethod
    def symmetric(cls, n: int):
        return cls("sym", n)

    @classmethod
    def reductive(cls, m: int):
        return cls("red", m)

    @classmethod
    def symmetric_reductive2(cls, n: int):
        return cls("symred2", n)

    @classmethod
    def custom(cls, f):
        return cls("mod", poly=parse_poly(f) if isinstance(f, str) else f)

    def context(self, gens) -> FreeQuandle:
        if self.kind == "medial":
            return medial_context(gens)
        if self.kind == "sym":
            return symmetric_context(gens, self.n)
        if self.kind == "red":
            return reductive_context(gens, self.n)
        if self.kind == "symred2":
            return symmetric_reductive2_context(gens, self.n)
        return make_f_quandle_context(gens, self.poly)

    def polynomials(self) -> list[LaurentPoly]:
        """Generators of the ideal I with: Q in the variety iff Q is an I-quandle."""
        if self.kind == "medial":
            return []
        if self.kind == "sym":
            return [symmetric_poly(self.n)]
        if self.kind == "red":
            return [reductive_poly(self.n)]
        if self.kind == "symred2":
            return [symmetric_poly(self.n), reductive_poly(2)]
        return [self.poly]

    def __str__(self):
        if self.kind == "medial":
            return "medial"
        if self.kind == "sym":
            return f"sym:{self.n}"
        if self.kind == "red":
            return f"red:{self.n}"
        if self.kind == "symred2":
            return f"sym:{self.n}+red:2"
        return f"mod:{self.poly}"


def parse_variety(text: str) -> VarietySpec:
    text = text.strip()
    if text == "medial":
        return VarietySpec.medial()
    if text.startswith("mod:"):
        return VarietySpec.custom(text[4:])
    parts = sorted(p.strip() for p in text.split("+"))
    try:
        parsed = [(k, int(v)) for k, v in (p.split(":") for p in parts)]
    except ValueError:
        raise ValueError(f"cannot parse variety {text!r}") from None
    if len(parsed) == 1:
        kind, n = parsed[0]
        if kind == "sym":
            return VarietySpec.symmetric(n)
        if kind == "red":
            return VarietySpec.reductive(n)
    if len(parsed) == 2 and [k for k, _ in parsed] == ["red", "sym"]:
        (_, m), (_, n) = parsed
        if m != 2:
            raise UnsupportedIdeal("combined symmetric/reductive varieties are supported for red:2 only")
        return VarietySpec.symmetric_reductive2(n)
    raise ValueError(f"cannot parse variety {text!r}")


# -- normal forms ---------------------------------------------------------------

def evaluate(term: Term, ctx: FreeQuandle) -> FreeElement:
    """Evaluate with each variable x sent to the generator (0, x)."""
    if isinstance(term, Var):
        return ctx.generator(term.name)
    left = evaluate(term.left, ctx)
    right = evaluate(term.right, ctx)
    if isinstance(term, Star):
        return ctx.star(left, right)
    return ctx.backslash(left, right)


def normalize(term: Term | str, variety: VarietySpec | None = None, gens=None) -> FreeElement:
    if isinstance(term, str):
        term = parse(term)
    variety = variety or VarietySpec.medial()
    gens = GeneratorSet.of(gens if gens is not None else variables(term))
    return evaluate(term, variety.context(gens))


@dataclass(frozen=True)
class Verdict:
    valid: bool
    lhs_nf: FreeElement
    rhs_nf: FreeElement

    @property
    def witness(self):
        return None if self.valid else (self.lhs_nf, self.rhs_nf)

    def __str__(self):
        return "valid" if self.valid else "invalid"

    def to_json(self) -> dict:
        return {
            "verdict": str(self),
            "lhs_nf": self.lhs_nf.to_json(),
            "rhs_nf": self.rhs_nf.to_json(),
        }


def decide_identity(lhs: Term | str, rhs: Term | str, variety: VarietySpec | None = None) -> Verdict:
    if isinstance(lhs, str):
        lhs = parse(lhs)
    if isinstance(rhs, str):
        rhs = parse(rhs)
    variety = variety or VarietySpec.medial()
    gens = GeneratorSet.of(list(dict.fromkeys(variables(lhs) + variables(rhs))))
    ctx = variety.context(gens)
    a, b = evaluate(lhs, ctx), evaluate(rhs, ctx)
    return Verdict(a == b, a, b)


# -- catalogue -------------------------------------------------------------------

def symmetry_ladder(k: int) -> Term:
    """x * (x * ( ... (x * y))) with k left multiplications by x."""
    node: Term = Var("y")
    for _ in range(k):
        node = Star(Var("x"), node)
    return node


def reductive_ladder(m: int) -> Term:
    """(...((x * y) * y) ... ) * y with m multiplications by y."""
    node: Term = Var("x")
    for _ in range(m):
        node = Star(node, Var("y"))
    return node


def builtin_identities() -> list[tuple[str, Term, Term]]:
    cat = [
        ("idempotency", "x * x", "x"),
        ("left-distributivity", "x * (y * z)", "(x * y) * (x * z)"),
        ("right-distributivity", "(x * y) * z", "(x * z) * (y * z)"),
        ("mediality", "(x * y) * (u * v)", "(x * u) * (y * v)"),
        ("left-quasigroup-1", "x \\ (x * y)", "y"),
        ("left-quasigroup-2", "x * (x \\ y)", "y"),
        ("commutativity", "x * y", "y * x"),
        ("involutory", "x * (x * y)", "y"),
        ("2-reductive", "(x * y) * y", "y"),
    ]
    out = [(name, parse(l), parse(r)) for name, l, r in cat]
    out += [(f"symmetry-{k}", symmetry_ladder(k), Var("y")) for k in range(1, 13)]
    out += [(f"reductive-{m}", reductive_ladder(m), Var("y")) for m in range(1, 7)]
    return out


# -- evaluation in finite tables ----------------------------------------------------

def _eval_table(term: Term, table: np.ndarray, ldiv: np.ndarray, env: dict) -> np.ndarray:
    if isinstance(term, Var):
        return env[term.name]
    a = _eval_table(term.left, table, ldiv, env)
    b = _eval_table(term.right, table, ldiv, env)
    return (table if isinstance(term, Star) else ldiv)[a, b]


def find_counterexample(quandle, lhs: Term, rhs: Term) -> dict[str, int] | None:
    """Exhaustively search all assignments in a finite quandle; None if the identity holds.

    ``quandle`` needs ``table`` (n x n array) and ``left_division`` arrays.
    """
    names = list(dict.fromkeys(variables(lhs) + variables(rhs)))
    n = quandle.size
    k = len(names)
    env = {}
    for pos, name in enumerate(names):
        shape = [1] * k
        shape[pos] = n
        env[name] = np.arange(n).reshape(shape)
    table, ldiv = quandle.table, quandle.left_division
    a = np.broadcast_to(_eval_table(lhs, table, ldiv, env), (n,) * k)
    b = np.broadcast_to(_eval_table(rhs, table, ldiv, env), (n,) * k)
    bad = np.argwhere(a != b)
    if len(bad) == 0:
        return None
    return {name: int(v) for name, v in zip(names, bad[0])}
