"""Trace-based geometry labels and the mod-2 tunnel-number obstruction."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import matrices as mx
from .matrices import Mat2


class GeometryType(enum.Enum):
    Periodic = "periodic"
    Reducible = "reducible"
    PseudoAnosov = "pseudo-Anosov"


def geometry_type(A: Mat2) -> GeometryType:
    # no special case for +-E: both have |trace| 2 and are labeled reducible
    t = abs(A.trace)
    if t < 2:
        return GeometryType.Periodic
    if t == 2:
        return GeometryType.Reducible
    return GeometryType.PseudoAnosov


def tunnel_one_family(m: int) -> Mat2:
    return Mat2(m, 1, -1, 0)


def paper_family(n: int) -> Mat2:
    """``[[4n-1, -2n], [2, -1]]``: trace ``4n-2``, determinant 1 for every n."""
    return Mat2(4 * n - 1, -2 * n, 2, -1)


@dataclass(frozen=True)
class TunnelVerdict:
    kind: str  # "tunnel-one" | "obstructed-mod2" | "unknown"
    conjugator: Optional[Mat2] = None
    m: Optional[int] = None
    inverse: bool = False
    bound: Optional[int] = None

    def to_json(self) -> dict:
        out: dict = {"verdict": self.kind}
        if self.kind == "tunnel-one":
            out.update(conjugator=self.conjugator.rows(), m=self.m, inverse=self.inverse)
        elif self.kind == "unknown":
            out["bound"] = self.bound
        return out


def tunnel_one_test(
    A: Mat2,
    m_bound: int = mx.DEFAULT_TUNNEL_BOUND,
    p_bound: int = mx.DEFAULT_TUNNEL_BOUND,
) -> TunnelVerdict:
    """Look for a GL2(Z) conjugation of ``A`` onto ``B_m = [[m, 1], [-1, 0]]`` or its inverse.

    Every ``B_m`` has a 1 in the upper-right corner mod 2 (and so does its
    inverse), while conjugation preserves being the identity mod 2; such an
    ``A`` is reported as obstructed without searching.
    """
    if mx.mod2(A) == (1, 0, 0, 1):
        return TunnelVerdict("obstructed-mod2")
    for m in range(-m_bound, m_bound + 1):
        if m != A.trace:
            # trace is a conjugacy invariant, and tr(B_m) = tr(B_m^-1) = m
            continue
        B = tunnel_one_family(m)
        for inv, target in ((False, B), (True, mx.inverse(B))):
            p = mx.bounded_gl2_conjugacy(A, target, p_bound)
            if p is not None:
                return TunnelVerdict("tunnel-one", p, m, inv)
    return TunnelVerdict("unknown", bound=p_bound)


def classify(A: Mat2, m_bound: int = mx.DEFAULT_TUNNEL_BOUND, p_bound: int = mx.DEFAULT_TUNNEL_BOUND) -> dict:
    return {
        "matrix": A.rows(),
        "trace": A.trace,
        "biorderable": A.trace >= 2,
        "geometry": geometry_type(A).value,
        "tunnel": tunnel_one_test(A, m_bound, p_bound).to_json(),
    }
