"""Exact 2x2 integer matrices of determinant +-1."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterator, List, Optional, Sequence, Tuple

INT64_MAX = 2**63 - 1

DEFAULT_NORMAL_FORM_BOUND = 5
DEFAULT_TUNNEL_BOUND = 8


class NotFound(LookupError):
    """No conjugator exists within the search bound."""


@dataclass(frozen=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for v in (self.a, self.b, self.c, self.d):
            if not isinstance(v, int):
                raise TypeError(f"matrix entries must be integers, got {v!r}")
            if abs(v) > INT64_MAX:
                raise OverflowError(f"matrix entry {v} exceeds 64-bit range")
        if self.det not in (1, -1):
            raise ValueError(f"determinant {self.det} is not +-1 for {self.rows()}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def parse(cls, text: str) -> "Mat2":
        """Parse the ``"a,b,c,d"`` row-major form."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected four comma-separated entries, got {text!r}")
        return cls(*(int(p) for p in parts))

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def rows(self) -> List[List[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mul(self, other)

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


IDENTITY = Mat2(1, 0, 0, 1)
NEG_IDENTITY = Mat2(-1, 0, 0, -1)


def mul(A: Mat2, B: Mat2) -> Mat2:
    return Mat2(
        A.a * B.a + A.b * B.c,
        A.a * B.b + A.b * B.d,
        A.c * B.a + A.d * B.c,
        A.c * B.b + A.d * B.d,
    )


def inverse(A: Mat2) -> Mat2:
    # adjugate / det; det is +-1 so the division is exact
    k = A.det
    return Mat2(A.d * k, -A.b * k, -A.c * k, A.a * k)


def power(A: Mat2, n: int) -> Mat2:
    base = A if n >= 0 else inverse(A)
    result = IDENTITY
    n = abs(n)
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base) if n > 1 else base
        n >>= 1
    return result


def trace(A: Mat2) -> int:
    return A.trace


def apply_vec(A: Mat2, v: Tuple[int, int]) -> Tuple[int, int]:
    return (A.a * v[0] + A.b * v[1], A.c * v[0] + A.d * v[1])


def cayley_hamilton_defect(A: Mat2) -> Tuple[int, int, int, int]:
    """Entries of ``A^2 - tr(A) A + E``; zero for every det +1 matrix.

    Returned as a raw tuple because the zero matrix is not a valid :class:`Mat2`.
    """
    if A.det != 1:
        raise ValueError("Cayley-Hamilton defect is defined here for det +1 only")
    sq = mul(A, A)
    t = A.trace
    return (sq.a - t * A.a + 1, sq.b - t * A.b, sq.c - t * A.c, sq.d - t * A.d + 1)


def mod2(A: Mat2) -> Tuple[int, int, int, int]:
    return (A.a % 2, A.b % 2, A.c % 2, A.d % 2)


def conjugate_by(p: Mat2, A: Mat2) -> Mat2:
    """``p A p^-1``."""
    return mul(mul(p, A), inverse(p))


def unimodular(bound: int) -> Iterator[Mat2]:
    """All det +-1 matrices with entries in ``[-bound, bound]``, lexicographic order."""
    rng = range(-bound, bound + 1)
    for a, b, c in iproduct(rng, rng, rng):
        ds = set()
        if a == 0:
            if b * c in (1, -1):
                ds = set(rng)
        else:
            for det in (1, -1):
                num = det + b * c
                if num % a == 0 and abs(num // a) <= bound:
                    ds.add(num // a)
        for d in sorted(ds):
            yield Mat2(a, b, c, d)


def sl2(bound: int) -> Iterator[Mat2]:
    """All det +1 matrices with entries in ``[-bound, bound]``, lexicographic order."""
    return (m for m in unimodular(bound) if m.det == 1)


# ---------------------------------------------------------------------------
# Normal form and conjugacy search


def is_normal(A: Mat2) -> bool:
    return A.a * A.d >= 0 and abs(A.a) >= abs(A.d)


@dataclass(frozen=True)
class NormalForm:
    n: Mat2
    p: Mat2

    def to_json(self) -> dict:
        return {"n": self.n.rows(), "p": self.p.rows()}

    @classmethod
    def from_json(cls, data: dict) -> "NormalForm":
        return cls(Mat2.from_rows(data["n"]), Mat2.from_rows(data["p"]))


def morimoto_normal_form(A: Mat2, bound: int = DEFAULT_NORMAL_FORM_BOUND) -> NormalForm:
    """GL2(Z)-conjugate of ``A`` with ``n11*n22 >= 0`` and ``|n11| >= |n22|``.

    Returns ``(A, E)`` when A already qualifies; otherwise the lexicographically
    least conjugator ``p`` (``p A p^-1 = n``) with entries bounded by ``bound``.
    """
    if A.det != 1:
        raise ValueError("normal form requires det +1")
    if is_normal(A):
        return NormalForm(A, IDENTITY)
    for p in unimodular(bound):
        n = conjugate_by(p, A)
        if is_normal(n):
            return NormalForm(n, p)
    raise NotFound(f"no normal-form conjugator for {A} within bound {bound}")


def bounded_gl2_conjugacy(A: Mat2, B: Mat2, bound: int) -> Optional[Mat2]:
    """Return ``p`` with ``p A p^-1 = B`` and entries bounded, or None.

    The identity is tried first, then all candidates in lexicographic order.
    """
    if A.trace != B.trace or A.det != B.det:
        return None
    if A == B:
        return IDENTITY
    for p in unimodular(bound):
        if mul(p, A) == mul(B, p):
            return p
    return None


# ---------------------------------------------------------------------------
# Twist generators


class TwistToken(enum.Enum):
    R = "R"
    Rinv = "Rinv"
    L = "L"
    Linv = "Linv"
    Neg = "Neg"

    @property
    def matrix(self) -> Mat2:
        return _TOKEN_MATRICES[self]

    @property
    def inverse(self) -> "TwistToken":
        return _TOKEN_INVERSES[self]


_TOKEN_MATRICES = {
    TwistToken.R: Mat2(1, 1, 0, 1),
    TwistToken.Rinv: Mat2(1, -1, 0, 1),
    TwistToken.L: Mat2(1, 0, 1, 1),
    TwistToken.Linv: Mat2(1, 0, -1, 1),
    TwistToken.Neg: NEG_IDENTITY,
}

_TOKEN_INVERSES = {
    TwistToken.R: TwistToken.Rinv,
    TwistToken.Rinv: TwistToken.R,
    TwistToken.L: TwistToken.Linv,
    TwistToken.Linv: TwistToken.L,
    TwistToken.Neg: TwistToken.Neg,
}


def tokens_product(tokens: Sequence[TwistToken]) -> Mat2:
    result = IDENTITY
    for t in tokens:
        result = mul(result, t.matrix)
    return result


def _r_power(k: int) -> List[TwistToken]:
    return [TwistToken.R if k > 0 else TwistToken.Rinv] * abs(k)


def _l_power(k: int) -> List[TwistToken]:
    return [TwistToken.L if k > 0 else TwistToken.Linv] * abs(k)


def _tdiv(n: int, m: int) -> int:
    # integer division truncated toward zero
    q = abs(n) // abs(m)
    return q if (n >= 0) == (m > 0) else -q


def decompose_twists(A: Mat2) -> List[TwistToken]:
    """Factor ``A`` as a left-to-right product of twist tokens.

    Euclidean reduction of the first column: each step peels a left factor
    ``R^q`` or ``L^q`` until the column is ``(+-1, 0)``, leaving a residual
    ``+-R^k``.
    """
    if A.det != 1:
        raise ValueError("twist decomposition requires det +1")
    left: List[TwistToken] = []
    M = A
    while M.c != 0:
        if M.a == 0:
            # c = +-1 here; R^-q with q = -c sends the column (0, c) to (1, c)
            q = -M.c
        elif abs(M.c) >= abs(M.a):
            q = _tdiv(M.c, M.a)
            left += _l_power(q)
            M = mul(power(TwistToken.L.matrix, -q), M)
            continue
        else:
            q = _tdiv(M.a, M.c)
        left += _r_power(q)
        M = mul(power(TwistToken.R.matrix, -q), M)
    # M = [[s, b], [0, s]] with s = +-1
    if M.a == 1:
        return left + _r_power(M.b)
    return left + [TwistToken.Neg] + _r_power(-M.b)
