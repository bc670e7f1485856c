import pytest
from hypothesis import given, settings, strategies as st

from torusfill.errors import DomainError, UsageError
from torusfill.laurent import LaurentPoly, VariableContext, embed, substitute

CTX = VariableContext(("s1", "s2"))


def P(text, ctx=CTX):
    return LaurentPoly.parse(text, ctx)


def test_parse_and_render_round_trip():
    p = P("s1^2*s2^-1 + 1 + s2")
    assert str(p) == "s1^2*s2^-1 + s2 + 1"
    assert P(str(p)) == p


def test_canonical_order_is_descending_graded_lex():
    p = P("s1^-1*s2^-1 + s2^-1 + s1")
    assert str(p) == "s1 + s2^-1 + s1^-1*s2^-1"


def test_addition_cancels_mod_two():
    assert (P("s1 + s2") + P("s2 + 1")) == P("s1 + 1")
    assert (P("s1") + P("s1")).is_zero()


def test_multiplication():
    assert P("s1 + 1") * P("s1 + 1") == P("s1^2 + 1")
    assert P("s1 + s2^-1") * P("s2") == P("s1*s2 + 1")


def test_inverse_and_powers():
    assert P("s1*s2^-2").inverse() == P("s1^-1*s2^2")
    assert P("s1") ** -3 == P("s1^-3")
    assert P("s1 + 1") ** 0 == LaurentPoly.one(CTX)
    with pytest.raises(DomainError):
        P("s1 + 1").inverse()


def test_context_mismatch_refused():
    other = VariableContext(("s1", "s3"))
    with pytest.raises(UsageError):
        P("s1") + LaurentPoly.var(other, "s1")


def test_duplicate_names_and_unknown_variable():
    with pytest.raises(UsageError):
        VariableContext(("s1", "s1"))
    with pytest.raises(UsageError):
        P("s7")
    with pytest.raises(UsageError):
        LaurentPoly(CTX, [(1, 2, 3)])


def test_json_round_trip():
    p = P("s1^-1*s2^-2 + s2 + s1")
    assert LaurentPoly.from_json(p.to_json(), CTX) == p
    assert p.to_json() == [[1, 0], [0, 1], [-1, -2]]


def test_substitute_monomial_images():
    target = VariableContext(("s1", "s2"))
    sn = LaurentPoly.monomial(target, [-1, -1])
    src = VariableContext(("s0", "s1", "s2", "s3"))
    p = LaurentPoly.parse("s0^-1*s3 + s1*s2^-1", src)
    out = substitute(p, {"s0": LaurentPoly.one(target), "s3": sn}, target)
    assert out == LaurentPoly.parse("s1^-1*s2^-1 + s1*s2^-1", target)


def test_substitute_non_monomial_image():
    p = P("s1^2 + s2")
    assert substitute(p, {"s1": P("s1 + 1")}, CTX) == P("s1^2 + s2 + 1")
    with pytest.raises(DomainError):
        substitute(P("s1^-1"), {"s1": P("s1 + 1")}, CTX)


def test_embed_only_needs_used_variables():
    big = VariableContext(("s0", "s1", "s2", "s5"))
    p = LaurentPoly.parse("s2^-1 + 1", VariableContext(("s0", "s2", "s9")))
    assert embed(p, big) == LaurentPoly.parse("s2^-1 + 1", big)


# --- ring axioms -----------------------------------------------------------

@st.composite
def polys(draw, ctx):
    mono = st.tuples(*[st.integers(-4, 4)] * ctx.arity)
    return LaurentPoly(ctx, draw(st.lists(mono, max_size=8)))


@st.composite
def triples(draw):
    k = draw(st.integers(1, 6))
    ctx = VariableContext(tuple(f"x{i}" for i in range(k)))
    return draw(polys(ctx)), draw(polys(ctx)), draw(polys(ctx))


@settings(max_examples=150, deadline=None)
@given(triples())
def test_ring_axioms(t):
    p, q, r = t
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + p).is_zero()
    assert p * q == q * p
    assert p * LaurentPoly.one(p.ctx) == p


@settings(max_examples=100, deadline=None)
@given(triples(), st.data())
def test_unimodular_substitution_keeps_term_count(t, data):
    p = t[0]
    k = p.ctx.arity
    # an elementary unimodular map: x_i -> x_i * x_j^c
    i = data.draw(st.integers(0, k - 1))
    j = data.draw(st.integers(0, k - 1))
    c = data.draw(st.integers(-3, 3)) if i != j else 0
    exps = [0] * k
    exps[i] += 1
    exps[j] += c
    img = {i: LaurentPoly.monomial(p.ctx, exps)}
    assert substitute(p, img, p.ctx).term_count() == p.term_count()
