"""Pinch-move maps and the augmentations induced by the fillings L_sigma.

The augmentation of a filling is computed two ways:

* :func:`close_filling` composes the pinch maps one crossing at a time and
  then applies the closing map of the two minimum cobordisms;
* :func:`closed_form_augmentation` writes it down directly from the index
  sets ``S_sigma^i``.

The two share only :func:`t_set`/:func:`s_set` and the Laurent arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .algebra import AlgebraElement, ChordId, apply_map, evaluate
from .errors import DGAError, UsageError
from .laurent import LaurentPoly, VariableContext, embed


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation: ``seq[i-1] = sigma(i)``."""

    seq: tuple
    _pos: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        seq = tuple(int(x) for x in self.seq)
        if sorted(seq) != list(range(1, len(seq) + 1)):
            raise UsageError(f"{seq} is not a permutation of 1..{len(seq)}")
        pos = [0] * (len(seq) + 1)
        for i, v in enumerate(seq, 1):
            pos[v] = i
        object.__setattr__(self, "seq", seq)
        object.__setattr__(self, "_pos", tuple(pos))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        try:
            return cls(tuple(int(x) for x in text.replace("(", "").replace(")", "").split(",")))
        except ValueError:
            raise UsageError(f"cannot parse permutation {text!r}") from None

    @property
    def n(self) -> int:
        return len(self.seq)

    def __call__(self, i: int) -> int:
        return self.seq[i - 1]

    def position(self, j: int) -> int:
        """sigma^{-1}(j): the step at which crossing j is pinched."""
        return self._pos[j]

    def __str__(self):
        return "(" + ",".join(map(str, self.seq)) + ")"

    def __iter__(self):
        return iter(self.seq)


def _between(i: int, j: int) -> range:
    return range(min(i, j) + 1, max(i, j))


def _check_index(sigma: Permutation, i: int) -> None:
    if not 1 <= i <= sigma.n:
        raise UsageError(f"index {i} out of range 1..{sigma.n}")


def t_set(sigma: Permutation, i: int) -> frozenset:
    """Crossings still present when b_i is pinched whose image that pinch alters."""
    _check_index(sigma, i)
    p = sigma.position
    return frozenset(
        j for j in range(1, sigma.n + 1)
        if p(j) > p(i) and all(p(k) < p(i) for k in _between(i, j))
    )


def s_set(sigma: Permutation, i: int) -> frozenset:
    """Earlier pinches contributing a correction term to the image of b_i."""
    _check_index(sigma, i)
    p = sigma.position
    return frozenset(
        j for j in range(1, sigma.n + 1)
        if p(j) < p(i) and all(p(k) < p(j) for k in _between(i, j))
    )


# --- step-by-step route ---------------------------------------------------


def band_alphabet(n: int, pinched: Iterable[int] = ()) -> tuple:
    pinched = set(pinched)
    chords = [ChordId(f"b{k}", 0) for k in range(1, n + 1) if k not in pinched]
    return tuple(chords) + (ChordId("a1", 1), ChordId("a2", 1))


def working_context(pinched: Iterable[int]) -> VariableContext:
    return VariableContext(("s0",) + tuple(f"s{k}" for k in sorted(set(pinched))))


@dataclass(frozen=True)
class PinchState:
    """Images of the chords of the original knot after ``step`` pinch moves."""

    n: int
    sigma: Permutation
    step: int
    ctx: VariableContext
    alphabet: tuple
    images: Mapping[str, AlgebraElement]

    @property
    def pinched(self) -> tuple:
        return self.sigma.seq[: self.step]

    @classmethod
    def initial(cls, sigma: Permutation) -> "PinchState":
        ctx = working_context(())
        alphabet = band_alphabet(sigma.n)
        images = {c.label: AlgebraElement.generator(ctx, alphabet, c.label) for c in alphabet}
        return cls(sigma.n, sigma, 0, ctx, alphabet, images)


def pinch_generator_images(sigma: Permutation, step: int, ctx: VariableContext,
                           alphabet: tuple) -> dict:
    """Generator images of the pinch at crossing sigma(step), in the new algebra.

    ``ctx``/``alphabet`` describe the diagram after the pinch.
    """
    k = sigma(step)
    images = {}
    for c in band_alphabet(sigma.n, sigma.seq[: step - 1]):
        if c.label == f"b{k}":
            images[c.label] = AlgebraElement.scalar(LaurentPoly.var(ctx, f"s{k}"), alphabet)
        else:
            images[c.label] = AlgebraElement.generator(ctx, alphabet, c.label)
    for j in t_set(sigma, k):
        exps = {f"s{k}": -1}
        for m in _between(j, k):
            exps[f"s{m}"] = -2
        correction = LaurentPoly.monomial(ctx, exps)
        images[f"b{j}"] = images[f"b{j}"] + AlgebraElement.scalar(correction, alphabet)
    return images


def pinch_map(state: PinchState, sigma: Permutation, step: int) -> PinchState:
    if sigma != state.sigma:
        raise UsageError(f"state was built for {state.sigma}, not {sigma}")
    if step != state.step + 1 or step > sigma.n:
        raise UsageError(f"pinch step {step} out of order after step {state.step}")
    pinched = sigma.seq[:step]
    ctx = working_context(pinched)
    alphabet = band_alphabet(sigma.n, pinched)
    gens = pinch_generator_images(sigma, step, ctx, alphabet)
    lift = lambda p: embed(p, ctx)  # noqa: E731  inclusion of coefficient rings
    images = {label: apply_map(x, gens, lift, ctx, alphabet) for label, x in state.images.items()}
    return PinchState(state.n, sigma, step, ctx, alphabet, images)


def pinch_sequence(sigma: Permutation) -> list:
    states = [PinchState.initial(sigma)]
    for step in range(1, sigma.n + 1):
        states.append(pinch_map(states[-1], sigma, step))
    return states


# --- augmentations --------------------------------------------------------


def filling_context(n: int) -> VariableContext:
    return VariableContext(tuple(f"s{i}" for i in range(1, n)))


def closing_substitution(n: int) -> dict:
    """Images of s0..sn in Z2[H1(L)]: s0 -> 1, sn -> (s1 ... s_{n-1})^{-1}."""
    ctx = filling_context(n)
    images = {"s0": LaurentPoly.one(ctx)}
    for i in range(1, n):
        images[f"s{i}"] = LaurentPoly.var(ctx, f"s{i}")
    images[f"s{n}"] = LaurentPoly.monomial(ctx, [-1] * (n - 1))
    return images


@dataclass(frozen=True)
class Augmentation:
    n: int
    sigma: Permutation
    ctx: VariableContext
    images: Mapping[str, LaurentPoly]  # b1..bn; a1, a2 -> 0 and s0 -> 1 implicitly

    def __eq__(self, other):
        if not isinstance(other, Augmentation):
            return NotImplemented
        return self.n == other.n and self.ctx == other.ctx and dict(self.images) == dict(other.images)

    def __hash__(self):
        return hash((self.n, tuple(self.images[f"b{i}"] for i in range(1, self.n + 1))))

    def same_values(self, other: "Augmentation") -> bool:
        return self == other

    def __getitem__(self, label: str) -> LaurentPoly:
        if label in ("a1", "a2"):
            return LaurentPoly.zero(self.ctx)
        return self.images[label]

    def chord_images(self) -> dict:
        out = {f"b{i}": self.images[f"b{i}"] for i in range(1, self.n + 1)}
        out["a1"] = out["a2"] = LaurentPoly.zero(self.ctx)
        return out

    def base_point_images(self) -> dict:
        return {"s0": LaurentPoly.one(self.ctx)}

    def __call__(self, x: AlgebraElement) -> LaurentPoly:
        return evaluate(self.chord_images(), self.base_point_images(), x, self.ctx)

    def term_counts(self) -> tuple:
        return tuple(self.images[f"b{i}"].term_count() for i in range(1, self.n + 1))

    def digest(self) -> tuple:
        return tuple(tuple(self.images[f"b{i}"].sorted_terms()) for i in range(1, self.n + 1))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sigma": list(self.sigma.seq),
            "images": {f"b{i}": self.images[f"b{i}"].to_json() for i in range(1, self.n + 1)},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Augmentation":
        n = int(data["n"])
        ctx = filling_context(n)
        images = {label: LaurentPoly.from_json(v, ctx) for label, v in data["images"].items()}
        if set(images) != {f"b{i}" for i in range(1, n + 1)}:
            raise UsageError(f"augmentation JSON must give images of b1..b{n}")
        return cls(n, Permutation(tuple(data["sigma"])), ctx, images)

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def render(self) -> str:
        return "\n".join(f"e(b{i}) = {self.images[f'b{i}']}" for i in range(1, self.n + 1))


def close_filling(state: PinchState, n: int | None = None) -> Augmentation:
    n = state.n if n is None else n
    if state.step != n:
        raise UsageError(f"only {state.step} of {n} pinches applied")
    leftovers = set()
    for x in state.images.values():
        leftovers |= x.chords_used() - {"a1", "a2"}
    if leftovers:
        raise DGAError(f"chords {sorted(leftovers)} survived all pinch moves")
    subs = closing_substitution(n)
    target = filling_context(n)
    zero = LaurentPoly.zero(target)
    images = {}
    for i in range(1, n + 1):
        images[f"b{i}"] = evaluate({"a1": zero, "a2": zero}, subs, state.images[f"b{i}"], target)
    for label in ("a1", "a2"):
        if not evaluate({"a1": zero, "a2": zero}, subs, state.images[label], target).is_zero():
            raise DGAError(f"{label} does not map to 0")
    return Augmentation(n, state.sigma, target, images)


def augmentation_by_pinching(sigma: Permutation) -> Augmentation:
    return close_filling(pinch_sequence(sigma)[-1])


def closed_form_augmentation(sigma: Permutation, n: int | None = None) -> Augmentation:
    n = sigma.n if n is None else n
    if n != sigma.n:
        raise UsageError(f"sigma has size {sigma.n}, expected {n}")
    if n % 2 == 0:
        raise UsageError(f"closed form is for knots (odd n), got n={n}")
    ctx = filling_context(n)

    def s_exps(i: int, power: int) -> list:
        # s_n stands for (s1 ... s_{n-1})^{-1}
        if i < n:
            e = [0] * (n - 1)
            e[i - 1] = power
            return e
        return [-power] * (n - 1)

    images = {}
    for i in range(1, n + 1):
        terms = [s_exps(i, 1)]
        for j in s_set(sigma, i):
            e = s_exps(j, -1)
            for k in _between(i, j):
                e = [x + y for x, y in zip(e, s_exps(k, -2))]
            terms.append(e)
        images[f"b{i}"] = LaurentPoly(ctx, terms)
    return Augmentation(n, sigma, ctx, images)


def lift_even(sigma: Permutation) -> Permutation:
    return Permutation((sigma.n + 1,) + sigma.seq)


def final_unknot_closure_vanishes(n: int, final_differential: Mapping[str, AlgebraElement]) -> bool:
    """Whether the closing map kills d(a1) and d(a2) of the final diagram."""
    target = filling_context(n)
    zero = LaurentPoly.zero(target)
    subs = closing_substitution(n)
    return all(
        evaluate({"a1": zero, "a2": zero}, subs, final_differential[a], target).is_zero()
        for a in ("a1", "a2")
    )

