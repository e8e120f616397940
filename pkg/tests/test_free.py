import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from freemedial.errors import BadModulus, ContextMismatch, NotInImage, NotInModel, UnsupportedIdeal, WrongContext
from freemedial.free import (
    FreeQuandle,
    GeneratorSet,
    affine_star,
    augmentation,
    backslash,
    decompose,
    decomposition_word,
    displacement_of_pair,
    element_from_json,
    embed_affine,
    ideal_context,
    joyce_isomorphism,
    joyce_model_star,
    make_f_quandle_context,
    medial_context,
    recompose,
    reductive_context,
    star,
    symmetric_context,
    symmetric_reductive2_context,
    unembed_affine,
)
from freemedial.poly import parse_poly as P
from freemedial.ring import RingSpec

XY = medial_context(["x", "y"])
X012 = medial_context(3)

CONTEXTS = {
    "medial": lambda g: medial_context(g),
    "sym2": lambda g: symmetric_context(g, 2),
    "sym3": lambda g: symmetric_context(g, 3),
    "sym6": lambda g: symmetric_context(g, 6),
    "red2": lambda g: reductive_context(g, 2),
    "red3": lambda g: reductive_context(g, 3),
    "symred4": lambda g: symmetric_reductive2_context(g, 4),
    "mod": lambda g: make_f_quandle_context(g, P("1-t^2+t^5")),
}

seeds = st.integers(0, 2**32 - 1)


def elements(ctx, rng, k):
    return [ctx.random_element(rng) for _ in range(k)]


def test_star_examples():
    x, y = XY.generators()
    assert x * x == x
    assert x * y == XY.element({"y": -1}, "y")
    assert y * x == XY.element({"y": 1}, "x")
    assert str(x * y) == "(-e_y, y)"


def test_backslash_examples():
    x, y = XY.generators()
    assert x.ldiv(x) == x
    expected = XY.element({"y": P("t^-1")}, "y")
    assert x.ldiv(y) == expected
    assert x * expected == y


@pytest.mark.parametrize("name", CONTEXTS)
def test_left_quasigroup_random(name):
    ctx = CONTEXTS[name](3)
    rng = random.Random(1)
    for _ in range(200):
        p, q = elements(ctx, rng, 2)
        assert p.ldiv(p * q) == q
        assert p * p.ldiv(q) == q


@pytest.mark.parametrize("name", CONTEXTS)
def test_quandle_axioms_random(name):
    ctx = CONTEXTS[name](["a", "b", "c"])
    rng = random.Random(2)
    for _ in range(150):
        p, q, r, s = elements(ctx, rng, 4)
        assert p * p == p
        assert p * (q * r) == (p * q) * (p * r)
        assert (p * q) * (r * s) == (p * r) * (q * s)


@settings(max_examples=60, deadline=None)
@given(seeds, st.sampled_from(sorted(CONTEXTS)))
def test_orbit_separation(seed, name):
    ctx = CONTEXTS[name](3)
    rng = random.Random(seed)
    p, q = elements(ctx, rng, 2)
    assert (p * q).gen == q.gen
    assert p.ldiv(q).gen == q.gen
    if p.gen != q.gen:
        assert p != q


def test_mediality_composite_formula():
    ctx = medial_context(4)
    R = ctx.ring
    rng = random.Random(5)
    one, t = R.one, R.t
    w = R.one_minus_t
    for _ in range(300):
        (a, i), (b, j), (c, k), (d, n) = [(p.coeffs, p.gen) for p in elements(ctx, rng, 4)]
        P_, Q_, U, V = (ctx.element(dict(v), g) for v, g in ((a, i), (b, j), (c, k), (d, n)))
        step = (P_ * Q_) * (U * V)
        vec = ctx._combine(
            (w * w, a), (t - t * t, b), (t - t * t, c), (t * t, d),
            (w, ctx.basis(i)), (t, ctx.basis(j)), (t, ctx.basis(k)), (-(one + t), ctx.basis(n)),
        )
        assert step.coeffs == vec and step.gen == n


def test_displacement_examples():
    ctx = X012
    rng = random.Random(0)
    p = ctx.random_element(rng)
    assert ctx.displacement()(p) == p
    e1 = ctx.basis_displacement("1")
    assert e1(p).vector["1"] == p.coeff("1") + 1
    t5 = e1.power(P("t^5"))
    assert t5(p).coeff("1") == p.coeff("1") + ctx.ring("t^5")
    z = ctx.generator("0")
    assert displacement_of_pair(p, p).is_identity()
    assert displacement_of_pair(ctx.generator("1"), z) == e1


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_displacement_of_pair_is_L_p_L_q_inverse(seed):
    ctx = X012
    rng = random.Random(seed)
    p, q, r = elements(ctx, rng, 3)
    assert displacement_of_pair(p, q)(r) == p * q.ldiv(r)


@settings(max_examples=60, deadline=None)
@given(seeds, st.sampled_from(["medial", "sym3", "red2", "mod"]))
def test_free_action(seed, name):
    ctx = CONTEXTS[name](3)
    rng = random.Random(seed)
    p = ctx.random_element(rng)
    d = ctx.displacement(dict(ctx.random_element(rng).coeffs))
    assert (d(p) == p) == d.is_identity()


def test_decompose_examples():
    ctx = X012
    assert decompose(ctx.generator("2")) == []
    p = ctx.element({"1": 1, "2": "t"}, "2")
    assert [(i, str(f)) for i, f in decompose(p)] == [("1", "1"), ("2", "t")]
    assert decomposition_word(p) == "(L_1 L_0^-1)(L_2 L_0^-1)^L (0,2)"


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_decompose_round_trip(seed):
    ctx = X012
    p = ctx.random_element(random.Random(seed))
    assert recompose(ctx, decompose(p), p.gen) == p


def test_embed_examples():
    ctx = X012
    zero = ctx.ring.zero
    assert embed_affine(ctx.generator("0")) == {"1": zero, "2": zero}
    assert embed_affine(ctx.generator("1")) == {"1": ctx.ring.one, "2": zero}
    a = embed_affine(ctx.element({"1": 1, "2": "t"}, "2"))
    assert {k: str(v) for k, v in a.items()} == {"1": "1-t", "2": "1+t-t^2"}
    assert augmentation(a) == {"1": 0, "2": 1}


def test_unembed_examples():
    ctx = X012
    p = unembed_affine({"1": "1-t", "2": "1+t-t^2"}, ctx)
    assert p == ctx.element({"1": 1, "2": "t"}, "2")
    assert unembed_affine({"1": 0, "2": 0}, ctx) == ctx.generator("0")
    with pytest.raises(NotInImage):
        unembed_affine({"1": 3, "2": 0}, ctx)


@pytest.mark.parametrize("name", ["medial", "sym2", "sym3", "sym6", "mod3"])
def test_embed_homomorphism_and_round_trip(name):
    if name == "mod3":
        ctx = make_f_quandle_context(3, P("1+t^2+t^3"))  # f(1) = 3
    else:
        ctx = CONTEXTS[name](3)
    rng = random.Random(8)
    seen = {}
    for _ in range(200):
        p, q = elements(ctx, rng, 2)
        ep, eq = embed_affine(p), embed_affine(q)
        assert embed_affine(p * q) == affine_star(ctx.ring, ep, eq)
        assert unembed_affine(ep, ctx) == p
        key = tuple(ep.values())
        assert seen.setdefault(key, p) == p  # injective


@pytest.mark.parametrize("name", ["red2", "red3", "symred4", "mod"])
def test_unembed_rejects_non_injective_contexts(name):
    ctx = CONTEXTS[name](3)
    with pytest.raises(WrongContext):
        unembed_affine(embed_affine(ctx.generator("1")), ctx)


def _iterate(f, x, k):
    for _ in range(k):
        x = f(x)
    return x


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_n_symmetry(n):
    ctx = symmetric_context(3, n)
    rng = random.Random(n)
    for _ in range(500):
        p, q = elements(ctx, rng, 2)
        assert _iterate(lambda r: p * r, q, n) == q
    if n > 2:
        p, q = ctx.generators()[:2]
        assert _iterate(lambda r: p * r, q, n - 1) != q


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_m_reductivity(m):
    ctx = reductive_context(3, m)
    rng = random.Random(m)
    for _ in range(500):
        p, q = elements(ctx, rng, 2)
        assert _iterate(lambda r: r * q, p, m) == q
    p, q = ctx.generators()[1], ctx.generators()[0]
    assert _iterate(lambda r: r * q, p, m - 1) != q


@pytest.mark.parametrize("name", ["medial", "sym2", "sym3", "sym6"])
def test_right_translation_injective(name):
    ctx = CONTEXTS[name](3)
    z = ctx.generator("0")
    rng = random.Random(4)
    images = {}
    for _ in range(300):
        p = ctx.random_element(rng)
        assert images.setdefault(p * z, p) == p


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_right_translation_not_injective_in_reductive(m):
    # (1-t)^(m-2) e_1 is killed by 1-t modulo (1-t)^(m-1)
    ctx = reductive_context(3, m)
    z = ctx.generator("0")
    p = ctx.element({"1": P("1-t") ** (m - 2)}, "0")
    assert p != z
    assert p * z == z * z


def test_f_quandle_star_shapes():
    sym2 = symmetric_context(["x", "y"], 2)
    red2 = reductive_context(["x", "y"], 2)
    rng = random.Random(6)
    for _ in range(100):
        p, q = elements(sym2, rng, 2)
        a, b = p.vector.get("y", sym2.ring.zero), q.vector.get("y", sym2.ring.zero)
        e = lambda g: 1 if g == "y" else 0  # noqa: E731
        assert (p * q).coeff("y") == 2 * a - b + e(p.gen) - e(q.gen)
        p, q = elements(red2, rng, 2)
        a, b = p.coeff("y"), q.coeff("y")
        assert (p * q).coeff("y") == b + e(p.gen) - e(q.gen)


def test_bad_modulus_context():
    with pytest.raises(BadModulus):
        make_f_quandle_context(2, P("2+t"))


def test_ideal_contexts():
    assert ideal_context(2, [P("1+t+t^2"), P("1-t")]).ring == RingSpec.quotient("1-t", 3)
    with pytest.raises(UnsupportedIdeal):
        ideal_context(2, [P("1+t"), P("1-2t+t^2")])


def test_single_generator_context():
    ctx = medial_context(["x"])
    x = ctx.generator("x")
    assert x * x == x and x.ldiv(x) == x
    assert embed_affine(x) == {}
    assert unembed_affine({}, ctx) == x


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        star(XY.generator("x"), X012.generator("0"))
    with pytest.raises(ContextMismatch):
        backslash(XY.generator("x"), symmetric_context(["x", "y"], 2).generator("x"))


def test_joyce_examples():
    assert joyce_model_star((1, 0), (1, 0)) == (1, 0)
    assert joyce_model_star((0, 0), (1, 0)) == (-1, 0)
    assert joyce_model_star((1, 0), (0, 1)) == (2, -1)
    with pytest.raises(NotInModel):
        joyce_model_star((1, 1), (0, 0))
    ctx = symmetric_context(3, 2)
    assert joyce_isomorphism(ctx.generator("0")) == (0, 0)
    assert joyce_isomorphism(ctx.generator("2")) == (0, 1)
    with pytest.raises(WrongContext):
        joyce_isomorphism(X012.generator("1"))


def test_joyce_homomorphism_random():
    ctx = symmetric_context(3, 2)
    rng = random.Random(12)
    for _ in range(500):
        p, q = elements(ctx, rng, 2)
        assert joyce_isomorphism(p * q) == joyce_model_star(joyce_isomorphism(p), joyce_isomorphism(q))


@pytest.mark.parametrize("name", sorted(CONTEXTS))
def test_json_round_trip(name):
    ctx = CONTEXTS[name](["u", "v", "w"])
    rng = random.Random(3)
    for _ in range(20):
        p = ctx.random_element(rng)
        text = json.dumps(p.to_json())
        assert element_from_json(text) == p


def test_json_without_gens_key():
    data = {"gen": "2", "coeffs": {"1": "1", "2": "t"}, "ring": "laurent"}
    assert element_from_json(data, gens=["0", "1", "2"]) == X012.element({"1": 1, "2": "t"}, "2")
    with pytest.raises(ValueError):
        element_from_json(data)


def test_generator_set_validation():
    assert GeneratorSet.of(3).minus == ("1", "2")
    assert GeneratorSet(("a", "b"), base="b").minus == ("a",)
    with pytest.raises(ValueError):
        GeneratorSet(("a", "a"))
    with pytest.raises(ValueError):
        GeneratorSet(())
