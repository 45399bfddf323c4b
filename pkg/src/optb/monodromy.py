"""Automorphisms of the fiber free group realizing a monodromy matrix.

Generator lifts (boundary word ``[x, y] = x y X Y``):

    R:    x -> x,   y -> yx      Rinv: x -> x,   y -> yX
    L:    x -> xy,  y -> y       Linv: x -> xY,  y -> y
    Neg:  x -> X,   y -> Y

R and L fix the boundary word exactly; Neg sends it to a conjugate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from . import matrices as mx
from .matrices import Mat2, TwistToken
from .words import Letter, Word, X_WORD, Y_WORD, abelianize, invert, is_conjugate, product

COMMUTATOR = Word.parse("xyXY")

_GENERATOR_IMAGES = {
    TwistToken.R: ("x", "yx"),
    TwistToken.Rinv: ("x", "yX"),
    TwistToken.L: ("xy", "y"),
    TwistToken.Linv: ("xY", "y"),
    TwistToken.Neg: ("X", "Y"),
}


@dataclass(frozen=True)
class MappingClass:
    tokens: Tuple[TwistToken, ...]
    img_x: Word
    img_y: Word

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __repr__(self) -> str:
        return f"MappingClass(x->{self.img_x}, y->{self.img_y})"


IDENTITY = MappingClass((), X_WORD, Y_WORD)


def generator(token: TwistToken) -> MappingClass:
    ix, iy = _GENERATOR_IMAGES[token]
    return MappingClass((token,), Word.parse(ix), Word.parse(iy))


def apply(m: MappingClass, w: Word) -> Word:
    images = {
        Letter.x: m.img_x,
        Letter.X: invert(m.img_x),
        Letter.y: m.img_y,
        Letter.Y: invert(m.img_y),
    }
    return product(images[l] for l in w.letters)


def compose(m1: MappingClass, m2: MappingClass) -> MappingClass:
    """The automorphism ``m1 . m2`` (apply m2 first)."""
    return MappingClass(m1.tokens + m2.tokens, apply(m1, m2.img_x), apply(m1, m2.img_y))


def from_tokens(tokens: Sequence[TwistToken]) -> MappingClass:
    m = IDENTITY
    for t in tokens:
        m = compose(m, generator(t))
    return m


def lift(A: Mat2) -> MappingClass:
    return from_tokens(mx.decompose_twists(A))


def invert_class(m: MappingClass) -> MappingClass:
    return from_tokens([t.inverse for t in reversed(m.tokens)])


def mc_power(m: MappingClass, n: int) -> MappingClass:
    base = m if n >= 0 else invert_class(m)
    result = IDENTITY
    for _ in range(abs(n)):
        result = compose(result, base)
    return result


def abelianization(m: MappingClass) -> Mat2:
    (a, c), (b, d) = abelianize(m.img_x), abelianize(m.img_y)
    return Mat2(a, b, c, d)


def boundary_image_ok(m: MappingClass) -> bool:
    return is_conjugate(COMMUTATOR, apply(m, COMMUTATOR))
