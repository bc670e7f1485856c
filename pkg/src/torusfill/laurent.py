"""Laurent polynomials over GF(2) in finitely many named variables.

A polynomial is a set of exponent tuples: a monomial is present iff its
coefficient is 1, so addition is symmetric difference.  Every value carries
the :class:`VariableContext` it lives in; arithmetic between different
contexts is refused rather than silently re-indexed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .errors import DomainError, UsageError

Monomial = tuple  # tuple[int, ...], one exponent per context variable


@dataclass(frozen=True)
class VariableContext:
    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        if len(set(names)) != len(names):
            raise UsageError(f"duplicate variable names in {names}")
        object.__setattr__(self, "names", names)

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UsageError(f"unknown variable {name!r} in context {self.names}") from None

    def __contains__(self, name) -> bool:
        return name in self.names

    def __iter__(self):
        return iter(self.names)


def monomial_key(mono: Monomial):
    """Sort key placing monomials in canonical (descending graded-lex) order."""
    return tuple(-x for x in (sum(mono),) + tuple(mono))


def _toggle(acc: set, mono) -> None:
    if mono in acc:
        acc.remove(mono)
    else:
        acc.add(mono)


class LaurentPoly:
    """Immutable element of GF(2)[x1^{+-1}, ..., xk^{+-1}]."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: VariableContext, terms: Iterable[Sequence[int]] = ()):
        reduced: set = set()
        k = ctx.arity
        for t in terms:
            t = tuple(int(e) for e in t)
            if len(t) != k:
                raise UsageError(f"monomial {t} has length {len(t)}, context arity is {k}")
            _toggle(reduced, t)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", frozenset(reduced))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, ctx, terms: frozenset) -> "LaurentPoly":
        p = cls.__new__(cls)
        object.__setattr__(p, "ctx", ctx)
        object.__setattr__(p, "terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # constructors

    @classmethod
    def zero(cls, ctx: VariableContext) -> "LaurentPoly":
        return cls._raw(ctx, frozenset())

    @classmethod
    def one(cls, ctx: VariableContext) -> "LaurentPoly":
        return cls._raw(ctx, frozenset([(0,) * ctx.arity]))

    @classmethod
    def monomial(cls, ctx: VariableContext, exponents: Union[Sequence[int], Mapping[str, int]]):
        if isinstance(exponents, Mapping):
            exps = [0] * ctx.arity
            for name, e in exponents.items():
                exps[ctx.index(name)] += e
            exponents = exps
        return cls(ctx, [tuple(exponents)])

    @classmethod
    def var(cls, ctx: VariableContext, name: str, power: int = 1) -> "LaurentPoly":
        return cls.monomial(ctx, {name: power})

    @classmethod
    def parse(cls, text: str, ctx: VariableContext) -> "LaurentPoly":
        """Parse the text rendering, e.g. ``"s1^2*s2^-1 + 1"``."""
        text = text.strip()
        if text == "0":
            return cls.zero(ctx)
        terms = []
        for chunk in text.split("+"):
            exps = [0] * ctx.arity
            for factor in chunk.split("*"):
                factor = factor.strip()
                if factor == "1":
                    continue
                m = re.fullmatch(r"([A-Za-z_~][\w~]*)(?:\^\(?(-?\d+)\)?)?", factor)
                if not m:
                    raise UsageError(f"cannot parse factor {factor!r}")
                exps[ctx.index(m.group(1))] += int(m.group(2) or 1)
            terms.append(exps)
        return cls(ctx, terms)

    # ring structure

    def _check(self, other: "LaurentPoly") -> None:
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"expected LaurentPoly, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise UsageError(f"context mismatch: {self.ctx.names} vs {other.ctx.names}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        return LaurentPoly._raw(self.ctx, self.terms ^ other.terms)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        acc: set = set()
        for a in self.terms:
            for b in other.terms:
                _toggle(acc, tuple(x + y for x, y in zip(a, b)))
        return LaurentPoly._raw(self.ctx, frozenset(acc))

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            return self.inverse() ** (-e)
        result = LaurentPoly.one(self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        if not self.is_monomial():
            raise DomainError(f"{self} is not a monomial and has no inverse")
        (t,) = self.terms
        return LaurentPoly._raw(self.ctx, frozenset([tuple(-e for e in t)]))

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ctx, self.terms)))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # queries

    def term_count(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == frozenset([(0,) * self.ctx.arity])

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self) -> list:
        return sorted(self.terms, key=monomial_key)

    def used_variables(self) -> set:
        return {i for t in self.terms for i, e in enumerate(t) if e}

    # rendering

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(format_monomial(t, self.ctx) for t in self.sorted_terms())

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> list:
        return [list(t) for t in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, ctx: VariableContext) -> "LaurentPoly":
        return cls(ctx, [tuple(t) for t in data])


def format_monomial(mono: Monomial, ctx: VariableContext) -> str:
    parts = []
    for name, e in zip(ctx.names, mono):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def substitute(p: LaurentPoly, images: Mapping, target: VariableContext | None = None) -> LaurentPoly:
    """Ring homomorphism sending each variable of ``p.ctx`` to a polynomial.

    ``images`` is keyed by variable name or index.  Variables that occur with
    a negative exponent must go to a monomial.  Variables absent from
    ``images`` are kept if ``target`` has a variable of the same name.
    """
    if target is None:
        ctxs = {v.ctx for v in images.values()}
        if len(ctxs) > 1:
            raise UsageError("substitution images live in different contexts")
        target = ctxs.pop() if ctxs else p.ctx
    by_index = {}
    for key, img in images.items():
        i = key if isinstance(key, int) else p.ctx.index(key)
        if img.ctx != target:
            raise UsageError(f"image of {p.ctx.names[i]} is not in the target context")
        by_index[i] = img
    used = p.used_variables()
    for i in used:
        if i not in by_index:
            name = p.ctx.names[i]
            if name not in target:
                raise UsageError(f"no image for variable {name!r}")
            by_index[i] = LaurentPoly.var(target, name)

    # monomial images combine by exponent arithmetic; the rest by powering
    mono_exps = {i: next(iter(img.terms)) for i, img in by_index.items() if img.is_monomial()}
    for i in used:
        if i not in mono_exps and any(t[i] < 0 for t in p.terms):
            raise DomainError(
                f"variable {p.ctx.names[i]!r} appears inverted but maps to non-monomial {by_index[i]}"
            )

    zero = (0,) * target.arity
    result = LaurentPoly.zero(target)
    acc: set = set()
    for t in p.terms:
        exps = list(zero)
        rest = []
        for i, e in enumerate(t):
            if not e:
                continue
            if i in mono_exps:
                for j, x in enumerate(mono_exps[i]):
                    exps[j] += e * x
            else:
                rest.append(by_index[i] ** e)
        if not rest:
            _toggle(acc, tuple(exps))
        else:
            term = LaurentPoly._raw(target, frozenset([tuple(exps)]))
            for factor in rest:
                term = term * factor
            result = result + term
    return result + LaurentPoly._raw(target, frozenset(acc))


def embed(p: LaurentPoly, target: VariableContext) -> LaurentPoly:
    """Re-index ``p`` into a context containing all of its used variables."""
    idx = {i: target.index(p.ctx.names[i]) for i in p.used_variables()}
    acc = set()
    for t in p.terms:
        exps = [0] * target.arity
        for i, j in idx.items():
            exps[j] += t[i]
        acc.add(tuple(exps))
    return LaurentPoly._raw(target, frozenset(acc))
