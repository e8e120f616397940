"""Finite binary algebras given by Cayley tables on {0, ..., n-1}.

Axiom checks run as exhaustive numpy loops.  Permutation groups (LMlt, Dis)
are closed breadth-first over tuple-encoded permutations; composition reads
right to left, ``(a * b)(x) = a(b(x))``, and conjugation is
``a.conjugate_by(b) = b a b^-1``.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ClosureLimitExceeded,
    NotAutomorphism,
    NotCancellative,
    NotGenerating,
    NotLeftQuasigroup,
    NotMedial,
    SizeLimit,
    TableFormatError,
)
from .free import GeneratorSet
from .poly import LaurentPoly

DEFAULT_CLOSURE_CAP = 10**6


def closure_cap() -> int:
    return int(os.environ.get("QF_CLOSURE_CAP", DEFAULT_CLOSURE_CAP))


# -- permutations ------------------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: Permutation) -> Permutation:
        a = self.image
        return Permutation(tuple(a[i] for i in other.image))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(len(self.image))
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate_by(self, beta: Permutation) -> Permutation:
        """alpha^beta = beta alpha beta^-1."""
        return beta * self * beta.inverse()

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def __len__(self):
        return len(self.image)


@dataclass(frozen=True)
class PermGroup:
    generators: tuple[Permutation, ...]
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a, b in itertools.combinations(gens, 2))

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    def __len__(self):
        return len(self.elements)


def closure(generators: Iterable[Permutation], degree: int, cap: int | None = None) -> PermGroup:
    """Subgroup generated by ``generators``, by breadth-first right multiplication."""
    cap = closure_cap() if cap is None else cap
    gens = tuple(dict.fromkeys(g for g in generators if not g.is_identity()))
    ident = Permutation.identity(degree)
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = s * g
            if h not in seen:
                seen.add(h)
                if len(seen) > cap:
                    raise ClosureLimitExceeded(f"group closure exceeded {cap} elements")
                queue.append(h)
    return PermGroup(gens, frozenset(seen))


# -- tables ----------------------------------------------------------------------

class FiniteBinaryTable:
    """Cayley table with ``table[x, y] = x * y``; immutable once built."""

    def __init__(self, table, labels: Sequence[str] | None = None):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise TableFormatError(f"expected a non-empty square table, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            raise TableFormatError("table entries out of range")
        arr.setflags(write=False)
        self.table = arr
        self.size = n
        if labels is not None and len(labels) != n:
            raise TableFormatError(f"{len(labels)} labels for {n} elements")
        self.labels = tuple(labels) if labels is not None else None
        self._ldiv = None

    def op(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def is_left_quasigroup(self) -> bool:
        return all(len(set(row)) == self.size for row in self.table.tolist())

    def left_translation(self, x: int) -> Permutation:
        row = tuple(self.table[x].tolist())
        if len(set(row)) != self.size:
            raise NotLeftQuasigroup(f"L_{x} is not a permutation")
        return Permutation(row)

    def left_translations(self) -> list[Permutation]:
        return [self.left_translation(x) for x in range(self.size)]

    def right_translation(self, x: int) -> tuple[int, ...]:
        return tuple(self.table[:, x].tolist())

    @property
    def left_division(self) -> np.ndarray:
        """``ldiv[x, y] = x \\ y``, the unique u with x * u = y."""
        if self._ldiv is None:
            if not self.is_left_quasigroup():
                raise NotLeftQuasigroup("left division needs a left quasigroup")
            ldiv = np.empty_like(self.table)
            rows = np.arange(self.size)[:, None]
            ldiv[rows, self.table] = np.arange(self.size)[None, :]
            ldiv.setflags(write=False)
            self._ldiv = ldiv
        return self._ldiv

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def __eq__(self, other):
        return isinstance(other, FiniteBinaryTable) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"FiniteBinaryTable(size={self.size})"

    # -- serialization --

    def to_text(self) -> str:
        lines = [str(self.size)] + [" ".join(map(str, row)) for row in self.table.tolist()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, labels=None) -> FiniteBinaryTable:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise TableFormatError("empty table file")
        try:
            n = int(lines[0])
            rows = [[int(v) for v in ln.split()] for ln in lines[1:]]
        except ValueError as exc:
            raise TableFormatError(str(exc)) from None
        if len(rows) != n or any(len(r) != n for r in rows):
            raise TableFormatError(f"expected {n} rows of {n} integers")
        return cls(rows, labels)

    def to_json(self) -> dict:
        out = {"n": self.size, "table": self.table.tolist()}
        if self.labels:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, data) -> FiniteBinaryTable:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["table"], data.get("labels"))


def load_table(path: str, labels_path: str | None = None) -> FiniteBinaryTable:
    with open(path) as fh:
        text = fh.read()
    labels = None
    if labels_path:
        with open(labels_path) as fh:
            labels = [ln.strip() for ln in fh if ln.strip()]
    if text.lstrip().startswith("{"):
        table = FiniteBinaryTable.from_json(text)
        return FiniteBinaryTable(table.table, labels or table.labels)
    return FiniteBinaryTable.from_text(text, labels)


# -- axioms ------------------------------------------------------------------------

@dataclass(frozen=True)
class AxiomReport:
    idempotent: bool
    left_quasigroup: bool
    left_distributive: bool
    medial: bool

    @property
    def is_quandle(self) -> bool:
        return self.idempotent and self.left_quasigroup and self.left_distributive

    @property
    def is_medial_quandle(self) -> bool:
        return self.is_quandle and self.medial


def is_idempotent(Q: FiniteBinaryTable) -> bool:
    idx = np.arange(Q.size)
    return bool(np.all(Q.table[idx, idx] == idx))


def is_left_distributive(Q: FiniteBinaryTable) -> bool:
    T = Q.table
    x = np.arange(Q.size)[:, None, None]
    y = np.arange(Q.size)[None, :, None]
    z = np.arange(Q.size)[None, None, :]
    return bool(np.all(T[x, T[y, z]] == T[T[x, y], T[x, z]]))


def is_medial(Q: FiniteBinaryTable) -> bool:
    T = Q.table
    n = Q.size
    y = np.arange(n)[:, None, None]
    u = np.arange(n)[None, :, None]
    v = np.arange(n)[None, None, :]
    for x in range(n):
        if not np.all(T[T[x, y], T[u, v]] == T[T[x, u], T[y, v]]):
            return False
    return True


def check_axioms(Q: FiniteBinaryTable) -> AxiomReport:
    return AxiomReport(
        idempotent=is_idempotent(Q),
        left_quasigroup=Q.is_left_quasigroup(),
        left_distributive=is_left_distributive(Q),
        medial=is_medial(Q),
    )


def is_quandle(Q: FiniteBinaryTable) -> bool:
    return is_idempotent(Q) and Q.is_left_quasigroup() and is_left_distributive(Q)


# -- groups ------------------------------------------------------------------------

def lmlt(Q: FiniteBinaryTable, cap: int | None = None) -> PermGroup:
    """LMlt(Q) = <L_x>."""
    return closure(Q.left_translations(), Q.size, cap)


def dis_generators(Q: FiniteBinaryTable) -> list[Permutation]:
    """L_x L_0^-1 for all x; these generate the same group as all L_x L_y^-1."""
    L = Q.left_translations()
    base_inv = L[0].inverse()
    return [Lx * base_inv for Lx in L]


def dis(Q: FiniteBinaryTable, cap: int | None = None) -> PermGroup:
    """Dis(Q) = <L_x L_y^-1>."""
    return closure(dis_generators(Q), Q.size, cap)


def random_word(Q: FiniteBinaryTable, rng: random.Random, length: int, exponent_sum: int) -> tuple[Permutation, int]:
    """A product of ``length`` left translations L_x^(+-1) with the given exponent sum."""
    if (length - exponent_sum) % 2 or abs(exponent_sum) > length:
        raise ValueError("impossible length/exponent-sum combination")
    plus = (length + exponent_sum) // 2
    signs = [1] * plus + [-1] * (length - plus)
    rng.shuffle(signs)
    L = Q.left_translations()
    w = Permutation.identity(Q.size)
    for e in signs:
        w = w * (L[rng.randrange(Q.size)] ** e)
    return w, sum(signs)


def dis_word_check(Q: FiniteBinaryTable, samples: int = 100, seed: int = 0,
                   D: PermGroup | None = None) -> bool:
    """Sampled words L_x1^e1 ... L_xk^ek lie in Dis iff L_0^(sum e_i) does.

    Zero-sum words must always land in Dis.
    """
    rng = random.Random(seed)
    D = D or dis(Q)
    L0 = Q.left_translation(0)
    for _ in range(samples):
        length = rng.randint(1, 5) * 2
        w, s = random_word(Q, rng, length, 0)
        if w not in D:
            return False
    for _ in range(samples):
        length = rng.randint(1, 9)
        s = rng.choice([k for k in range(-length, length + 1) if (length - k) % 2 == 0 and k])
        w, _ = random_word(Q, rng, length, s)
        if (w in D) != ((L0 ** s) in D):
            return False
    return True


@dataclass(frozen=True)
class MedialityReport:
    medial: bool
    dis_abelian: bool

    @property
    def agree(self) -> bool:
        return self.medial == self.dis_abelian


def medial_iff_dis_abelian(Q: FiniteBinaryTable) -> MedialityReport:
    """Check mediality syntactically and via commutation of Dis generators."""
    return MedialityReport(medial=is_medial(Q), dis_abelian=dis(Q).is_abelian)


# -- orbits ------------------------------------------------------------------------

def orbits(Q: FiniteBinaryTable) -> list[list[int]]:
    """Orbits of the Dis-action, each sorted, ordered by least element."""
    gens = dis_generators(Q)
    seen = [False] * Q.size
    out = []
    for start in range(Q.size):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        i = 0
        while i < len(orbit):
            y = orbit[i]
            i += 1
            for g in gens:
                for img in (g(y), g.inverse()(y)):
                    if not seen[img]:
                        seen[img] = True
                        orbit.append(img)
        out.append(sorted(orbit))
    return out


@dataclass(frozen=True)
class OrbitGroup:
    """The group on the orbit Qx with alpha(x) + beta(x) = alpha beta(x)."""

    base: int
    elements: tuple[int, ...]
    add: dict
    neg: dict

    def is_abelian_group(self) -> bool:
        E = self.elements
        add = self.add
        if any(add[(self.base, a)] != a for a in E):
            return False
        if any(add[(a, self.neg[a])] != self.base for a in E):
            return False
        if any(add[(a, b)] != add[(b, a)] for a in E for b in E):
            return False
        return all(add[(add[(a, b)], c)] == add[(a, add[(b, c)])] for a in E for b in E for c in E)

    def __len__(self):
        return len(self.elements)


def orbit_group(Q: FiniteBinaryTable, x: int, D: PermGroup | None = None) -> OrbitGroup:
    D = D or dis(Q)
    reps: dict[int, Permutation] = {}
    for alpha in sorted(D.elements, key=lambda p: p.image):
        reps.setdefault(alpha(x), alpha)
    orbit = tuple(sorted(reps))
    add = {(a, b): reps[a](b) for a in orbit for b in orbit}
    for alpha in D.elements:
        a = alpha(x)
        if any(alpha(b) != add[(a, b)] for b in orbit):
            raise NotMedial(f"orbit group at {x} is not well defined")
    neg = {a: reps[a].inverse()(x) for a in orbit}
    return OrbitGroup(x, orbit, add, neg)


# -- subvarieties ----------------------------------------------------------------

def check_symmetry(Q: FiniteBinaryTable, n: int) -> bool:
    """L_x^n = 1 for every x."""
    T = Q.table
    rows = np.arange(Q.size)[:, None]
    cur = np.broadcast_to(np.arange(Q.size), T.shape)
    for _ in range(n):
        cur = T[rows, cur]
    return bool(np.all(cur == np.arange(Q.size)[None, :]))


def check_reductivity(Q: FiniteBinaryTable, m: int) -> bool:
    """(...((x * y) * y) ...) * y = y with m factors y, for all x, y."""
    T = Q.table
    cols = np.arange(Q.size)[None, :]
    cur = np.broadcast_to(np.arange(Q.size)[:, None], T.shape)
    for _ in range(m):
        cur = T[cur, cols]
    return bool(np.all(cur == cols))


def displacement_power(Q: FiniteBinaryTable, alpha: Permutation, f: LaurentPoly) -> Permutation:
    """alpha^f = prod_r (alpha^(L^r))^(c_r), conjugating by L = L_0."""
    L = Q.left_translation(0)
    result = Permutation.identity(Q.size)
    for r, c in f.items():
        result = result * (alpha.conjugate_by(L ** r) ** c)
    return result


def check_I_quandle(Q: FiniteBinaryTable, f) -> bool:
    """alpha^f = 1 for all alpha in Dis(Q).

    The set {alpha : alpha^f = 1} is a submodule of Dis(Q), so testing the
    generators L_x L_0^-1 is enough.
    """
    if isinstance(f, (list, tuple)):
        return all(check_I_quandle(Q, g) for g in f)
    f = LaurentPoly.coerce(f)
    if not is_medial(Q):
        raise NotMedial("I-quandles are medial by definition")
    return all(displacement_power(Q, a, f).is_identity() for a in dis_generators(Q))


# -- generators --------------------------------------------------------------------

def subquandle(Q: FiniteBinaryTable, X: Iterable[int]) -> frozenset:
    """Closure of X under * and \\."""
    T, ldiv = Q.table, Q.left_division
    elems = set(X)
    frontier = list(elems)
    while frontier:
        new = []
        current = list(elems)
        for a in frontier:
            for b in current:
                for c in (T[a, b], T[b, a], ldiv[a, b], ldiv[b, a]):
                    c = int(c)
                    if c not in elems:
                        elems.add(c)
                        new.append(c)
        frontier = new
    return frozenset(elems)


def greedy_generating_set(Q: FiniteBinaryTable) -> list[int]:
    gens: list[int] = []
    covered: frozenset = frozenset()
    for x in range(Q.size):
        if x not in covered:
            gens.append(x)
            covered = subquandle(Q, gens)
    return gens


def dis_generator_check(Q: FiniteBinaryTable, X: Sequence[int], z: int | None = None,
                        s: int | None = None, D: PermGroup | None = None) -> bool:
    """Does {(L_x L_z^-1)^(L^k)} generate Dis(Q)?

    Without ``s``, k ranges over all integers (over one period of L_z) and x
    over X; with ``s``, only x in X minus z and 0 <= k < s are used.
    """
    X = list(X)
    z = X[0] if z is None else z
    if z not in X:
        raise ValueError("z must belong to X")
    if subquandle(Q, X) != frozenset(range(Q.size)):
        raise NotGenerating(f"{X} does not generate the quandle")
    L = Q.left_translations()
    Lz = L[z]
    Lz_inv = Lz.inverse()
    if s is None:
        xs, ks = X, range(Lz.order())
    else:
        xs, ks = [x for x in X if x != z], range(s)
    conj = [Lz ** k for k in ks]
    gens = [(L[x] * Lz_inv).conjugate_by(c) for x in xs for c in conj]
    D = D or dis(Q)
    return closure(gens, Q.size).elements == D.elements


# -- constructors ------------------------------------------------------------------

def affine_quandle(orders: Sequence[int], aut) -> FiniteBinaryTable:
    """Aff(A, h) on A = Z_k1 x ... x Z_kd: a * b = (1 - h)(a) + h(b).

    ``aut`` is a scalar u (h = multiplication by u) or a d x d integer matrix
    acting on column vectors.
    """
    orders = [int(k) for k in orders]
    if not orders or any(k < 1 for k in orders):
        raise ValueError("cyclic orders must be positive")
    d = len(orders)
    if np.isscalar(aut):
        M = [[int(aut) if i == j else 0 for j in range(d)] for i in range(d)]
    else:
        M = [[int(v) for v in row] for row in aut]
        if len(M) != d or any(len(row) != d for row in M):
            raise NotAutomorphism(f"matrix must be {d} x {d}")
    for i in range(d):
        for j in range(d):
            if (M[i][j] * orders[j]) % orders[i]:
                raise NotAutomorphism(f"entry ({i},{j}) does not induce a homomorphism")
    elems = list(itertools.product(*(range(k) for k in orders)))
    index = {a: i for i, a in enumerate(elems)}

    def h(a):
        return tuple(sum(M[i][j] * a[j] for j in range(d)) % orders[i] for i in range(d))

    images = [h(a) for a in elems]
    if len(set(images)) != len(elems):
        raise NotAutomorphism("h is not bijective")
    n = len(elems)
    table = [[0] * n for _ in range(n)]
    for ia, a in enumerate(elems):
        ha = images[ia]
        for ib in range(n):
            hb = images[ib]
            table[ia][ib] = index[tuple((a[i] - ha[i] + hb[i]) % orders[i] for i in range(d))]
    labels = [str(a[0]) for a in elems] if d == 1 else [str(a) for a in elems]
    Q = FiniteBinaryTable(table, labels)
    report = check_axioms(Q)
    assert report.is_medial_quandle, "affine quandles are medial quandles"
    return Q


MAX_TABLE_SIZE = 5000


def free_2reductive_symmetric(n: int, gens, max_size: int = MAX_TABLE_SIZE) -> FiniteBinaryTable:
    """Z_n^(X minus z) x X with (a, i) * (b, j) = (b + e_i - e_j, j)."""
    if n < 1:
        raise ValueError("n must be positive")
    X = GeneratorSet.of(gens)
    coords = X.minus
    size = n ** len(coords) * len(X)
    if size > max_size:
        raise SizeLimit(f"table would have {size} elements (limit {max_size})")
    vectors = list(itertools.product(range(n), repeat=len(coords)))
    elems = [(a, i) for i in X.names for a in vectors]
    index = {e: k for k, e in enumerate(elems)}
    pos = {x: k for k, x in enumerate(coords)}

    def basis(i):
        v = [0] * len(coords)
        if i in pos:
            v[pos[i]] = 1
        return v

    table = []
    for a, i in elems:
        ei = basis(i)
        row = []
        for b, j in elems:
            ej = basis(j)
            c = tuple((b[k] + ei[k] - ej[k]) % n for k in range(len(coords)))
            row.append(index[(c, j)])
        table.append(row)
    labels = [f"({','.join(map(str, a))};{i})" for a, i in elems]
    return FiniteBinaryTable(table, labels)


def free_2reductive_generators(n: int, gens) -> list[int]:
    """Indices of the generators (0, i) in :func:`free_2reductive_symmetric`."""
    X = GeneratorSet.of(gens)
    block = n ** len(X.minus)
    return [k * block for k in range(len(X))]


def projection_quandle(n: int) -> FiniteBinaryTable:
    """x * y = y."""
    return FiniteBinaryTable([list(range(n)) for _ in range(n)])


def conjugation_quandle(perms: Sequence[Permutation]) -> FiniteBinaryTable:
    """x * y = x y x^-1 on a conjugation-closed set of permutations."""
    perms = list(perms)
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[y.conjugate_by(x)] for y in perms] for x in perms]
    return FiniteBinaryTable(table)


# -- right translations ------------------------------------------------------------

def right_translation_embedding(Q: FiniteBinaryTable, x: int) -> tuple[int, ...]:
    """y |-> y * x, an injective homomorphism Q -> Qx for cancellative medial Q."""
    if not is_medial(Q):
        raise NotMedial("R_x is an endomorphism only for medial quandles")
    for y in range(Q.size):
        if len(set(Q.right_translation(y))) != Q.size:
            raise NotCancellative(f"R_{y} is not injective")
    R = Q.right_translation(x)
    T = Q.table
    for a in range(Q.size):
        for b in range(Q.size):
            if R[T[a, b]] != T[R[a], R[b]]:
                raise NotMedial("R_x failed to be a homomorphism")
    return R


# -- search for non-medial quandles --------------------------------------------------

@dataclass(frozen=True)
class SearchResult:
    witness: FiniteBinaryTable | None
    size: int | None
    seed: int
    nodes: int


def search_nonmedial(max_n: int = 6, seed: int = 0, budget: int = 200_000, min_n: int = 3) -> SearchResult:
    """Backtracking search for a non-medial quandle of order <= max_n.

    Rows are permutations fixing their own index (idempotent left
    quasigroups); left distributivity is checked as soon as the rows it
    involves are assigned.  ``seed`` shuffles the candidate order.
    """
    rng = random.Random(seed)
    nodes = 0
    for n in range(min_n, max_n + 1):
        candidates = []
        for x in range(n):
            others = [y for y in range(n) if y != x]
            rows = []
            for perm in itertools.permutations(others):
                row = list(range(n))
                for y, img in zip(others, perm):
                    row[y] = img
                rows.append(tuple(row))
            rng.shuffle(rows)
            candidates.append(rows)
        rows: list[tuple[int, ...] | None] = [None] * n

        def consistent(k: int) -> bool:
            # every triple whose rows x, y and L_x(y) are assigned
            for x in range(k + 1):
                Lx = rows[x]
                for y in range(k + 1):
                    Ly = rows[y]
                    Lxy = rows[Lx[y]]
                    if Lxy is None or (x != k and y != k and Lx[y] != k):
                        continue
                    for z in range(n):
                        if Lx[Ly[z]] != Lxy[Lx[z]]:
                            return False
            return True

        def backtrack(k: int):
            nonlocal nodes
            if k == n:
                Q = FiniteBinaryTable([list(r) for r in rows])
                return Q if not is_medial(Q) else None
            for row in candidates[k]:
                nodes += 1
                if nodes > budget:
                    return None
                rows[k] = row
                if consistent(k):
                    found = backtrack(k + 1)
                    if found is not None:
                        return found
                rows[k] = None
            return None

        found = backtrack(0)
        if found is not None:
            return SearchResult(found, n, seed, nodes)
        if nodes > budget:
            break
    return SearchResult(None, None, seed, nodes)
