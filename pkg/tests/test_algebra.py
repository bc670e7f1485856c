import pytest

from torusfill.algebra import (AlgebraElement, ChordId, apply_map, evaluate, extend_derivation,
                               make_alphabet)
from torusfill.errors import UsageError
from torusfill.laurent import LaurentPoly, VariableContext

CTX = VariableContext(("s0",))
AB = make_alphabet([ChordId("b1", 0), ChordId("b2", 0), ChordId("a1", 1)])


def gen(label):
    return AlgebraElement.generator(CTX, AB, label)


def test_noncommutative_product():
    x = gen("b1") * gen("b2")
    y = gen("b2") * gen("b1")
    assert x != y
    assert str(x + y) == "b1*b2 + b2*b1"
    assert (x + x).is_zero()


def test_scalars_commute_with_chords():
    s0 = LaurentPoly.var(CTX, "s0", -1)
    assert gen("b1") * s0 == s0 * gen("b1")
    assert str(gen("b1") * s0) == "s0^-1*b1"


def test_gradings_and_coefficients():
    s0 = LaurentPoly.var(CTX, "s0", -1)
    x = AlgebraElement.scalar(s0, AB) + gen("b1") + AlgebraElement.word(CTX, AB, ["b1", "b2"])
    assert x.gradings() == {0}
    assert x.constant_part() == s0
    assert x.coefficient_of(["b1", "b2"]).is_one()
    assert (gen("a1") * gen("b1")).gradings() == {1}


def test_leibniz_rule():
    d = {"b1": AlgebraElement.zero(CTX, AB), "b2": AlgebraElement.zero(CTX, AB),
         "a1": gen("b1") + AlgebraElement.one(CTX, AB)}
    x = gen("a1") * gen("b2") * gen("a1")
    # d(a1 b2 a1) = (b1 + 1) b2 a1 + a1 b2 (b1 + 1)
    want = (gen("b1") * gen("b2") * gen("a1") + gen("b2") * gen("a1")
            + gen("a1") * gen("b2") * gen("b1") + gen("a1") * gen("b2"))
    assert extend_derivation(d, x) == want
    assert extend_derivation(d, AlgebraElement.one(CTX, AB)).is_zero()


def test_derivation_needs_every_chord():
    with pytest.raises(UsageError):
        extend_derivation({}, gen("b1"))


def test_evaluate_is_a_ring_map():
    target = VariableContext(("t",))
    t = LaurentPoly.var(target, "t")
    one = LaurentPoly.one(target)
    chords = {"b1": t + one, "b2": t, "a1": LaurentPoly.zero(target)}
    x = gen("b1") * gen("b2") + gen("b2") * gen("b1") + gen("a1") * gen("b1")
    assert evaluate(chords, {"s0": one}, x, target).is_zero()
    y = gen("b1") * gen("b2") + AlgebraElement.scalar(LaurentPoly.var(CTX, "s0", -1), AB)
    assert evaluate(chords, {"s0": t}, y, target) == t * t + t + t.inverse()


def test_apply_map_substitutes_generators():
    images = {"b1": gen("b1") + AlgebraElement.one(CTX, AB), "b2": gen("b2"), "a1": gen("a1")}
    x = gen("b1") * gen("b1")
    out = apply_map(x, images, lambda p: p, CTX, AB)
    assert out == gen("b1") * gen("b1") + AlgebraElement.one(CTX, AB)


def test_alphabet_mismatch_and_duplicates():
    other = make_alphabet([ChordId("b1", 0)])
    with pytest.raises(UsageError):
        gen("b1") + AlgebraElement.generator(CTX, other, "b1")
    with pytest.raises(UsageError):
        make_alphabet([ChordId("b1", 0), ChordId("b1", 1)])
    with pytest.raises(UsageError):
        gen("b9")
