"""Words in the free group of rank two on ``x`` and ``y``.

Letters are serialized as ``x``, ``y`` for the generators and ``X``, ``Y``
for their inverses; the empty string is the identity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Optional, Sequence, Tuple


class Letter(enum.IntEnum):
    x = 1
    X = -1
    y = 2
    Y = -2

    @property
    def inverse(self) -> "Letter":
        return Letter(-self.value)

    @property
    def generator(self) -> str:
        return "x" if abs(self.value) == 1 else "y"

    @property
    def sign(self) -> int:
        return 1 if self.value > 0 else -1

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return self.name


# Canonical rotation order: x < x^-1 < y < y^-1.
_ORDER = {Letter.x: 0, Letter.X: 1, Letter.y: 2, Letter.Y: 3}


def _free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: list = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; use :func:`reduce` or :meth:`parse` to build one."""

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(Letter(l) for l in self.letters)
        for a, b in zip(letters, letters[1:]):
            if a == -b:
                raise ValueError(f"word is not freely reduced: {_format(letters)!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> "Word":
        try:
            raw = [Letter[ch] for ch in text.strip()]
        except KeyError as exc:
            raise ValueError(f"bad letter {exc.args[0]!r} in word {text!r}") from None
        return reduce(raw)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __str__(self) -> str:
        return _format(self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


EMPTY = Word()
X_WORD = Word((Letter.x,))
Y_WORD = Word((Letter.y,))


def _format(letters: Sequence[Letter]) -> str:
    return "".join(l.name for l in letters)


def reduce(raw: Iterable[Letter]) -> Word:
    return Word(_free_reduce(raw))


def concat(u: Word, v: Word) -> Word:
    a, b = u.letters, v.letters
    i = 0
    n = min(len(a), len(b))
    while i < n and a[len(a) - 1 - i] == -b[i]:
        i += 1
    return Word(a[: len(a) - i] + b[i:])


def product(words: Iterable[Word]) -> Word:
    out: list = []
    for w in words:
        for letter in w.letters:
            if out and out[-1] == -letter:
                out.pop()
            else:
                out.append(letter)
    return Word(tuple(out))


def invert(u: Word) -> Word:
    return Word(tuple(-l for l in reversed(u.letters)))


def conjugate(u: Word, g: Word) -> Word:
    """Return the reduced form of ``g u g^-1``."""
    return product((g, u, invert(g)))


def power(u: Word, n: int) -> Word:
    base = u if n >= 0 else invert(u)
    return product([base] * abs(n))


@dataclass(frozen=True)
class CyclicWord:
    """A cyclically reduced word stored in its least rotation."""

    letters: Tuple[Letter, ...] = ()

    @classmethod
    def from_letters(cls, letters: Sequence[Letter]) -> "CyclicWord":
        letters = tuple(Letter(l) for l in letters)
        n = len(letters)
        for i in range(n):
            if n > 1 and letters[i] == -letters[(i + 1) % n]:
                raise ValueError(f"not cyclically reduced: {_format(letters)!r}")
        r = _least_rotation(letters)
        return cls(letters[r:] + letters[:r])

    @classmethod
    def parse(cls, text: str) -> "CyclicWord":
        return cyclic_reduce(Word.parse(text))[0]

    def inverse(self) -> "CyclicWord":
        return CyclicWord.from_letters(tuple(-l for l in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return _format(self.letters)

    def __repr__(self) -> str:
        return f"CyclicWord({str(self)!r})"


def _least_rotation(letters: Sequence[Letter]) -> int:
    n = len(letters)
    if n == 0:
        return 0
    keys = [_ORDER[l] for l in letters]
    doubled = keys + keys
    return min(range(n), key=lambda i: doubled[i:i + n])


def _split_cyclic(u: Word) -> Tuple[Word, Tuple[Letter, ...]]:
    letters = u.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == -letters[j]:
        i += 1
        j -= 1
    return Word(letters[:i]), letters[i:j + 1]


def cyclic_reduce(u: Word) -> Tuple[CyclicWord, Word]:
    """Split ``u = stem . core' . stem^-1`` with ``core'`` cyclically reduced.

    Returns the core as a :class:`CyclicWord` together with the maximal stem.
    """
    stem, core = _split_cyclic(u)
    return CyclicWord.from_letters(core), stem


def is_conjugate(u: Word, v: Word) -> bool:
    return cyclic_reduce(u)[0] == cyclic_reduce(v)[0]


def solve_conjugacy(u: Word, v: Word) -> Optional[Word]:
    """Find ``g`` with ``g v g^-1 == u``, or ``None`` if u and v are not conjugate.

    With ``u = s.cu.s^-1`` and ``v = t.cv.t^-1`` (linear cores), the smallest
    offset ``r`` with ``cu == cv[r:] + cv[:r]`` is used and the answer is
    ``s . cv[:r]^-1 . t^-1``.
    """
    s, cu = _split_cyclic(u)
    t, cv = _split_cyclic(v)
    if len(cu) != len(cv):
        return None
    n = len(cv)
    for r in range(max(n, 1)):
        if cv[r:] + cv[:r] == cu:
            return product((s, invert(Word(cv[:r])), invert(t)))
    return None


def abelianize(u: Word) -> Tuple[int, int]:
    ex = ey = 0
    for letter in u.letters:
        if abs(letter) == 1:
            ex += letter.sign
        else:
            ey += letter.sign
    return ex, ey


def slope_word(p: int, q: int) -> CyclicWord:
    """Cutting sequence of the simple loop with homology class ``(p, q)``.

    ``|p|`` letters ``x^sign(p)`` sit at positions ``k/|p|`` of the circle and
    ``|q|`` letters ``y^sign(q)`` at ``(j + 1/(2|p|))/|q|``; reading them in
    order gives the balanced cyclic word.  The y-offset is chosen so that no
    position is shared by both families.
    """
    if (p, q) == (0, 0) or gcd(abs(p), abs(q)) != 1:
        raise ValueError(f"slope ({p}, {q}) is not a primitive class")
    ap, aq = abs(p), abs(q)
    lx = Letter.x if p > 0 else Letter.X
    ly = Letter.y if q > 0 else Letter.Y
    shift = Fraction(1, 2 * ap) if ap else Fraction(1, 2)
    marks = [(Fraction(k, ap), lx) for k in range(ap)]
    marks += [((j + shift) / aq, ly) for j in range(aq)]
    marks.sort(key=lambda m: m[0])
    return CyclicWord.from_letters([m[1] for m in marks])


def reduced_words(max_len: int) -> Iterator[Word]:
    """All reduced words of length at most ``max_len``, shortest first."""
    layer = [()]
    yield EMPTY
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for letter in Letter:
                if w and w[-1] == -letter:
                    continue
                nxt.append(w + (letter,))
        for w in nxt:
            yield Word(w)
        layer = nxt
