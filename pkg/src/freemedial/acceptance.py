"""Acceptance checks, shared by ``tests/test_acceptance.py`` and ``freemedial suite``.

Each check returns a :class:`CriterionResult`; time limits are part of the
pass condition.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .corpus import full_corpus, in_variety
from .errors import NotInImage
from .finite import (
    check_I_quandle,
    check_reductivity,
    check_symmetry,
    conjugation_quandle,
    dis,
    dis_generator_check,
    medial_iff_dis_abelian,
    search_nonmedial,
    Permutation,
)
from .free import (
    FreeQuandle,
    augmentation,
    decompose,
    decomposition_word,
    embed_affine,
    joyce_isomorphism,
    joyce_model_star,
    medial_context,
    reductive_context,
    symmetric_context,
    symmetric_reductive2_context,
    unembed_affine,
)
from .poly import (
    T,
    LaurentPoly,
    factor_symmetric_poly,
    parse_poly,
    product,
    reductive_poly,
    symmetric_poly,
)
from .ring import RingSpec, crt_residues
from .terms import VarietySpec, builtin_identities, decide_identity, find_counterexample


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.name} ({self.seconds:.2f}s): {self.detail}"


def _timed(number: int, name: str, limit: float | None):
    def wrap(fn: Callable[[], tuple[bool, str]]):
        def run() -> CriterionResult:
            start = time.perf_counter()
            ok, detail = fn()
            elapsed = time.perf_counter() - start
            if limit is not None and elapsed >= limit:
                ok = False
                detail += f"; exceeded time limit {limit}s"
            return CriterionResult(number, name, ok, detail, elapsed)
        run.__name__ = fn.__name__
        return run
    return wrap


# 1 ----------------------------------------------------------------------------

EXAMPLE_VECTOR = {"1": "1-t", "2": "1+t-t^2"}


def verify_worked_example(vector=None, gens=("0", "1", "2")) -> tuple[bool, list[str]]:
    """Recompute Lambda(a), unembed, decompose and re-embed; returns (ok, report lines)."""
    ctx = medial_context(list(gens))
    vector = EXAMPLE_VECTOR if vector is None else vector
    a = {x: ctx.ring(parse_poly(v) if isinstance(v, str) else v) for x, v in vector.items()}
    lines = [f"a = ({', '.join(str(a[x]) for x in ctx.gens.minus)})"]
    lam = augmentation(a)
    lines.append(f"Lambda(a) = ({', '.join(str(lam[x]) for x in ctx.gens.minus)})")
    try:
        p = unembed_affine(a, ctx)
    except NotInImage as exc:
        lines.append(f"NotInImage: {exc}")
        return False, lines
    lines.append(f"unembedded: {p}")
    lines.append(f"decomposition: {decomposition_word(p)}")
    back = embed_affine(p)
    same = all(back[x] == a.get(x, ctx.ring.zero) for x in ctx.gens.minus)
    lines.append(f"re-embedded: ({', '.join(str(back[x]) for x in ctx.gens.minus)})")
    lines.append("round trip: " + ("identical" if same else "DIFFERENT"))
    return same, lines


@_timed(1, "worked example (three generators)", 1.0)
def criterion_1():
    ctx = medial_context(["0", "1", "2"])
    ok, lines = verify_worked_example()
    a = {x: ctx.ring(parse_poly(v)) for x, v in EXAMPLE_VECTOR.items()}
    lam = augmentation(a)
    p = unembed_affine(a, ctx)
    checks = {
        "Lambda(a) = (0,1)": lam == {"1": 0, "2": 1},
        "coefficients (1, t)": p.vector == {"1": ctx.ring.one, "2": ctx.ring(T)},
        "generator 2": p.gen == "2",
        "decomposition": decompose(p) == [("1", ctx.ring.one), ("2", ctx.ring(T))]
        and decomposition_word(p) == "(L_1 L_0^-1)(L_2 L_0^-1)^L (0,2)",
        "round trip": ok,
    }
    failed = [k for k, v in checks.items() if not v]
    return not failed, "; ".join(lines[1:4]) if not failed else f"failed: {failed}"


# 2 ----------------------------------------------------------------------------

AXIOM_CONTEXTS = {
    "medial": lambda X: medial_context(X),
    "sym:2": lambda X: symmetric_context(X, 2),
    "sym:3": lambda X: symmetric_context(X, 3),
    "sym:6": lambda X: symmetric_context(X, 6),
    "red:2": lambda X: reductive_context(X, 2),
    "red:3": lambda X: reductive_context(X, 3),
    "sym:4+red:2": lambda X: symmetric_reductive2_context(X, 4),
}


def axiom_violations(ctx: FreeQuandle, trials: int, seed: int) -> dict[str, int]:
    rng = random.Random(seed)
    bad = {"idempotency": 0, "left-distributivity": 0, "mediality": 0, "quasigroup-1": 0, "quasigroup-2": 0}
    for _ in range(trials):
        p, q, r, s = (ctx.random_element(rng) for _ in range(4))
        bad["idempotency"] += (p * p) != p
        bad["left-distributivity"] += p * (q * r) != (p * q) * (p * r)
        bad["mediality"] += (p * q) * (r * s) != (p * r) * (q * s)
        bad["quasigroup-1"] += p.ldiv(p * q) != q
        bad["quasigroup-2"] += p * p.ldiv(q) != q
    return bad


@_timed(2, "quandle axioms in free (f-)quandles", 30.0)
def criterion_2():
    X = ["x", "y", "z"]
    total = 0
    per = []
    for i, (name, make) in enumerate(AXIOM_CONTEXTS.items()):
        bad = axiom_violations(make(X), 1000, seed=100 + i)
        total += sum(bad.values())
        per.append(f"{name}:{sum(bad.values())}")
    return total == 0, f"1000 trials x {len(AXIOM_CONTEXTS)} contexts, violations " + " ".join(per)


# 3 ----------------------------------------------------------------------------

DECISION_VARIETIES = [
    VarietySpec.medial(),
    VarietySpec.symmetric(2),
    VarietySpec.symmetric(3),
    VarietySpec.symmetric(4),
    VarietySpec.symmetric(6),
    VarietySpec.reductive(2),
    VarietySpec.reductive(3),
    VarietySpec.symmetric_reductive2(2),
    VarietySpec.symmetric_reductive2(3),
    VarietySpec.symmetric_reductive2(4),
]


def decision_table():
    """Verdicts for every catalogue identity and variety, with finite-model evidence.

    Returns rows (identity, variety, valid, members, refuters).
    """
    corpus = full_corpus()
    catalogue = builtin_identities()
    holds = {
        (name, e.name): find_counterexample(e.table, lhs, rhs) is None
        for name, lhs, rhs in catalogue
        for e in corpus
    }
    rows = []
    for variety in DECISION_VARIETIES:
        members = [e for e in corpus if in_variety(e.table, variety)]
        for name, lhs, rhs in catalogue:
            verdict = decide_identity(lhs, rhs, variety)
            refuters = [e.name for e in members if not holds[(name, e.name)]]
            rows.append((name, str(variety), verdict.valid, len(members), refuters))
    return rows


@_timed(3, "identity decisions vs finite models", None)
def criterion_3():
    rows = decision_table()
    disagreements = [(n, v) for n, v, valid, _, ref in rows if valid and ref]
    index = {(n, v): (valid, ref) for n, v, valid, _, ref in rows}
    required = {
        ("commutativity", "medial"): "refuted by the corpus",
        ("involutory", "sym:3"): "refuted by the sym:3 corpus",
    }
    missing = [k for k in required if index[k][0] or not index[k][1]]
    ladder_ok = all(
        index[(f"symmetry-{k}", f"sym:{n}")][0] == (k % n == 0)
        for k in range(1, 13) for n in (2, 3, 4, 6)
    )
    unrefuted = sum(1 for _, _, valid, _, ref in rows if not valid and not ref)
    ok = not disagreements and not missing and ladder_ok
    detail = (f"{len(rows)} verdicts, {len(disagreements)} disagreements, "
              f"ladder {'ok' if ladder_ok else 'WRONG'}, required refutations "
              f"{'present' if not missing else f'missing {missing}'}, "
              f"{unrefuted} invalid verdicts without a finite refuter in the corpus")
    return ok, detail


# 4 ----------------------------------------------------------------------------

def joyce_values(max_len: int = 6, gens=("x", "y", "z")):
    """Distinct values of terms with at most ``max_len`` variable occurrences.

    Returns (levels, pairs): levels[k] holds the values first reached at size k
    and ``pairs`` the (p, q) combinations that build size <= max_len terms.
    """
    ctx = symmetric_context(list(gens), 2)
    levels = {1: set(ctx.generators())}
    reached = set(levels[1])
    pairs = []
    by_size = {1: set(levels[1])}
    for k in range(2, max_len + 1):
        new = set()
        for a in range(1, k):
            for p in by_size[a]:
                for q in by_size[k - a]:
                    pairs.append((p, q))
                    new.add(p * q)
                    new.add(p.ldiv(q))
        by_size[k] = new
        levels[k] = new - reached
        reached |= new
    return ctx, reached, pairs


@_timed(4, "Joyce model equivalence", 10.0)
def criterion_4():
    ctx, values, pairs = joyce_values(6)
    iso = {p: joyce_isomorphism(p) for p in values}
    violations = 0
    if len(set(iso.values())) != len(iso):
        violations += 1
    for v in iso.values():
        if sum(1 for c in v if c % 2) > 1:
            violations += 1
    # the model is involutory, so left division is again 2a - b
    for p, q in pairs:
        model = joyce_model_star(iso[p], iso[q])
        if joyce_isomorphism(p * q) != model or joyce_isomorphism(p.ldiv(q)) != model:
            violations += 1
    rng = random.Random(4)
    vals = sorted(values, key=str)
    extra = 60000
    for _ in range(extra):
        p, q = rng.choice(vals), rng.choice(vals)
        if joyce_isomorphism(p * q) != joyce_model_star(iso[p], iso[q]):
            violations += 1
    return violations == 0, (f"{len(values)} distinct values, {len(pairs)} building pairs, "
                             f"{extra} sampled pairs, {violations} violations")


# 5 ----------------------------------------------------------------------------

@_timed(5, "symmetry/reductivity as I-quandle conditions", None)
def criterion_5():
    disagreements = []
    checks = 0
    for e in full_corpus():
        Q = e.table
        for k in range(1, 7):
            checks += 2
            if check_symmetry(Q, k) != check_I_quandle(Q, symmetric_poly(k)):
                disagreements.append((e.name, f"sym {k}"))
            if check_reductivity(Q, k) != check_I_quandle(Q, reductive_poly(k)):
                disagreements.append((e.name, f"red {k}"))
    return not disagreements, f"{checks} comparisons, disagreements: {disagreements or 0}"


# 6 ----------------------------------------------------------------------------

def transposition_quandle_s4():
    """Conjugation quandle on the six transpositions of S_4 (not medial)."""
    perms = []
    for i in range(4):
        for j in range(i + 1, 4):
            img = list(range(4))
            img[i], img[j] = j, i
            perms.append(Permutation(tuple(img)))
    return conjugation_quandle(perms)


@_timed(6, "medial iff Dis abelian", None)
def criterion_6():
    models = [(e.name, e.table) for e in full_corpus()]
    notes = []
    for order in (4, 5, 6):
        search = search_nonmedial(max_n=order, seed=0, min_n=order)
        if search.witness is not None:
            models.append((f"search witness (order {order}, seed {search.seed})", search.witness))
        else:
            notes.append(f"no non-medial witness of order {order} within budget")
    if not any(name.startswith("search witness") for name, _ in models):
        notes.append("'only if' direction covered vacuously by the search")
    models.append(("transpositions of S_4", transposition_quandle_s4()))
    nonmedial = 0
    bad = []
    for name, Q in models:
        rep = medial_iff_dis_abelian(Q)
        nonmedial += not rep.medial
        if not rep.agree:
            bad.append(name)
    detail = f"{len(models)} quandles ({nonmedial} non-medial), disagreements: {bad or 0}"
    if notes:
        detail += "; " + "; ".join(notes)
    return not bad and nonmedial > 0, detail


# 7 ----------------------------------------------------------------------------

@_timed(7, "cyclotomic CRT layer", 5.0)
def criterion_7():
    problems = []
    rng = random.Random(7)
    for n in (2, 3, 4, 6, 8, 12):
        f = symmetric_poly(n)
        factors = factor_symmetric_poly(n)
        if product(factors) != f:
            problems.append(f"product n={n}")
        if (T - 1) * f != LaurentPoly({n: 1, 0: -1}):
            problems.append(f"t^n-1 n={n}")
        R = RingSpec.quotient(f)
        count = 0
        while count < 500:
            a = R(LaurentPoly({e: rng.randint(-9, 9) for e in range(n - 1)}))
            if a.is_zero():
                continue
            count += 1
            if all(r.is_zero() for r in crt_residues(a, factors)):
                problems.append(f"zero residues n={n} a={a}")
    return not problems, f"n in (2,3,4,6,8,12), 500 elements each, problems: {problems or 0}"


# 8 ----------------------------------------------------------------------------

@_timed(8, "Dis generating sets", None)
def criterion_8():
    failures = []
    checks = 0
    for e in full_corpus():
        Q = e.table
        D = dis(Q)
        X = list(e.generators)
        checks += 1
        if not dis_generator_check(Q, X, X[0], D=D):
            failures.append((e.name, "all k"))
        bounds = set()
        for k in range(2, 7):
            if check_symmetry(Q, k):
                bounds.add(k - 1)
            if check_reductivity(Q, k):
                bounds.add(k - 1)
        for s in sorted(bounds):
            checks += 1
            if not dis_generator_check(Q, X, X[0], s=s, D=D):
                failures.append((e.name, f"s={s}"))
    return not failures, f"{checks} checks, failures: {failures or 0}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


def run_all(threads: int = 1) -> list[CriterionResult]:
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(threads) as pool:
            return list(pool.map(lambda c: c(), CRITERIA))
    return [c() for c in CRITERIA]
