"""Free unital algebra on Reeb chords over a GF(2) Laurent ring.

Coefficients commute with chords; chords do not commute with each other.
An element is a set of ``(monomial, word)`` pairs, where a word is a tuple of
indices into the chord alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .errors import UsageError
from .laurent import LaurentPoly, VariableContext, format_monomial, monomial_key, substitute


@dataclass(frozen=True)
class ChordId:
    label: str
    grading: int


def make_alphabet(chords: Iterable[ChordId]) -> tuple:
    chords = tuple(chords)
    labels = [c.label for c in chords]
    if len(set(labels)) != len(labels):
        raise UsageError(f"duplicate chord labels {labels}")
    return chords


def _toggle(acc: set, item) -> None:
    if item in acc:
        acc.remove(item)
    else:
        acc.add(item)


class AlgebraElement:
    __slots__ = ("ctx", "alphabet", "terms", "_index")

    def __init__(self, ctx: VariableContext, alphabet: tuple, terms: Iterable = ()):
        acc: set = set()
        for mono, word in terms:
            mono = tuple(mono)
            if len(mono) != ctx.arity:
                raise UsageError(f"monomial {mono} does not match context arity {ctx.arity}")
            word = tuple(word)
            if any(not 0 <= w < len(alphabet) for w in word):
                raise UsageError(f"word {word} indexes outside the alphabet")
            _toggle(acc, (mono, word))
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "terms", frozenset(acc))
        object.__setattr__(self, "_index", None)

    @classmethod
    def _raw(cls, ctx, alphabet, terms: frozenset) -> "AlgebraElement":
        x = cls.__new__(cls)
        object.__setattr__(x, "ctx", ctx)
        object.__setattr__(x, "alphabet", alphabet)
        object.__setattr__(x, "terms", terms)
        object.__setattr__(x, "_index", None)
        return x

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    # constructors

    @classmethod
    def zero(cls, ctx, alphabet) -> "AlgebraElement":
        return cls._raw(ctx, alphabet, frozenset())

    @classmethod
    def scalar(cls, p: LaurentPoly, alphabet) -> "AlgebraElement":
        return cls._raw(p.ctx, alphabet, frozenset((t, ()) for t in p.terms))

    @classmethod
    def one(cls, ctx, alphabet) -> "AlgebraElement":
        return cls.scalar(LaurentPoly.one(ctx), alphabet)

    @classmethod
    def generator(cls, ctx, alphabet, label: str) -> "AlgebraElement":
        i = _label_index(alphabet, label)
        return cls._raw(ctx, alphabet, frozenset([((0,) * ctx.arity, (i,))]))

    @classmethod
    def word(cls, ctx, alphabet, labels: Iterable[str], coeff: LaurentPoly | None = None):
        w = tuple(_label_index(alphabet, lab) for lab in labels)
        monos = coeff.terms if coeff is not None else [(0,) * ctx.arity]
        return cls._raw(ctx, alphabet, frozenset((m, w) for m in monos))

    # structure

    def _check(self, other: "AlgebraElement") -> None:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if other.alphabet != self.alphabet:
            raise UsageError("chord alphabet mismatch")
        if other.ctx != self.ctx:
            raise UsageError(f"context mismatch: {self.ctx.names} vs {other.ctx.names}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement._raw(self.ctx, self.alphabet, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return self.scale(other)
        return alg_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, LaurentPoly):
            return self.scale(other)
        return NotImplemented

    def scale(self, p: LaurentPoly) -> "AlgebraElement":
        if p.ctx != self.ctx:
            raise UsageError("coefficient context mismatch")
        acc: set = set()
        for c in p.terms:
            for mono, word in self.terms:
                _toggle(acc, (tuple(x + y for x, y in zip(c, mono)), word))
        return AlgebraElement._raw(self.ctx, self.alphabet, frozenset(acc))

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.ctx == other.ctx and self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, self.alphabet, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def labels(self, word) -> tuple:
        return tuple(self.alphabet[i].label for i in word)

    def word_grading(self, word) -> int:
        return sum(self.alphabet[i].grading for i in word)

    def gradings(self) -> set:
        return {self.word_grading(w) for _, w in self.terms}

    def chords_used(self) -> set:
        return {self.alphabet[i].label for _, w in self.terms for i in w}

    def coefficient_of(self, labels: Iterable[str]) -> LaurentPoly:
        w = tuple(_label_index(self.alphabet, lab) for lab in labels)
        return LaurentPoly(self.ctx, [m for m, ww in self.terms if ww == w])

    def constant_part(self) -> LaurentPoly:
        return self.coefficient_of(())

    def sorted_terms(self) -> list:
        return sorted(self.terms, key=lambda t: (len(t[1]), t[1], monomial_key(t[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for mono, word in self.sorted_terms():
            parts = [] if (not any(mono) and word) else [format_monomial(mono, self.ctx)]
            parts.extend(self.labels(word))
            out.append("*".join(parts))
        return " + ".join(out)

    def __repr__(self):
        return f"AlgebraElement({str(self)!r})"

    def to_json(self) -> list:
        return [[list(m), list(self.labels(w))] for m, w in self.sorted_terms()]


def _label_index(alphabet, label: str) -> int:
    for i, c in enumerate(alphabet):
        if c.label == label:
            return i
    raise UsageError(f"chord {label!r} not in alphabet {[c.label for c in alphabet]}")


def alg_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check(y)
    acc: set = set()
    for m1, w1 in x.terms:
        for m2, w2 in y.terms:
            _toggle(acc, (tuple(a + b for a, b in zip(m1, m2)), w1 + w2))
    return AlgebraElement._raw(x.ctx, x.alphabet, frozenset(acc))


def extend_derivation(d: Mapping[str, AlgebraElement], x: AlgebraElement) -> AlgebraElement:
    """Apply the Leibniz extension of ``d`` (given on chord labels) to ``x``.

    Coefficients are cycles, so pure-coefficient terms are annihilated.
    """
    ctx, alphabet = x.ctx, x.alphabet
    acc: set = set()
    for mono, word in x.terms:
        for j, c in enumerate(word):
            label = alphabet[c].label
            if label not in d:
                raise UsageError(f"derivation undefined on chord {label!r}")
            dc = d[label]
            if dc.alphabet != alphabet or dc.ctx != ctx:
                raise UsageError(f"d({label}) lives in a different algebra")
            left, right = word[:j], word[j + 1:]
            for m2, w2 in dc.terms:
                _toggle(acc, (tuple(a + b for a, b in zip(mono, m2)), left + w2 + right))
    return AlgebraElement._raw(ctx, alphabet, frozenset(acc))


def evaluate(chord_images: Mapping[str, LaurentPoly], var_images: Mapping, x: AlgebraElement,
             target: VariableContext | None = None) -> LaurentPoly:
    """Unital ring map into a commutative Laurent ring.

    ``chord_images`` gives the value of every chord in ``x``; ``var_images``
    is passed to :func:`substitute` for the coefficients.
    """
    if target is None:
        ctxs = {p.ctx for p in chord_images.values()} | {p.ctx for p in var_images.values()}
        if len(ctxs) != 1:
            raise UsageError("cannot infer a single target context for evaluation")
        target = ctxs.pop()
    images = []
    for c in x.alphabet:
        img = chord_images.get(c.label)
        images.append(img)
    result = LaurentPoly.zero(target)
    word_cache: dict = {}
    for mono, word in x.terms:
        value = word_cache.get(word)
        if value is None:
            value = LaurentPoly.one(target)
            for i in word:
                if images[i] is None:
                    raise UsageError(f"no image for chord {x.alphabet[i].label!r}")
                value = value * images[i]
            word_cache[word] = value
        if value.is_zero():
            continue
        coeff = substitute(LaurentPoly._raw(x.ctx, frozenset([mono])), var_images, target)
        result = result + coeff * value
    return result


def apply_map(x: AlgebraElement, chord_images: Mapping[str, AlgebraElement],
              coeff_map: Callable[[LaurentPoly], LaurentPoly], target_ctx: VariableContext,
              target_alphabet: tuple) -> AlgebraElement:
    """Algebra homomorphism between free algebras, defined on generators."""
    result = AlgebraElement.zero(target_ctx, target_alphabet)
    for mono, word in x.terms:
        coeff = coeff_map(LaurentPoly._raw(x.ctx, frozenset([mono])))
        term = AlgebraElement.scalar(coeff, target_alphabet)
        for i in word:
            label = x.alphabet[i].label
            if label not in chord_images:
                raise UsageError(f"no image for chord {label!r}")
            term = alg_mul(term, chord_images[label])
        result = result + term
    return result
