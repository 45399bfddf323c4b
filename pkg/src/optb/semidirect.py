"""The bundle group F2 x| Z, where the circle generator tau acts by a mapping class."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .monodromy import MappingClass, apply, mc_power
from .words import EMPTY, Word, concat, invert


@dataclass(frozen=True)
class BundleElement:
    """``w . tau^k`` kept in normal form."""

    w: Word = EMPTY
    k: int = 0


BUNDLE_IDENTITY = BundleElement()


def tau(k: int = 1) -> BundleElement:
    return BundleElement(EMPTY, k)


def fiber(w: Word) -> BundleElement:
    return BundleElement(w, 0)


@lru_cache(maxsize=256)
def _power(m: MappingClass, n: int) -> MappingClass:
    return mc_power(m, n)


def sd_mul(m: MappingClass, e1: BundleElement, e2: BundleElement) -> BundleElement:
    """``(g1, t^n1)(g2, t^n2) = (g1 . phi^n1(g2), t^(n1+n2))``."""
    return BundleElement(concat(e1.w, apply(_power(m, e1.k), e2.w)), e1.k + e2.k)


def sd_inv(m: MappingClass, e: BundleElement) -> BundleElement:
    return BundleElement(apply(_power(m, -e.k), invert(e.w)), -e.k)


def sd_product(m: MappingClass, *elements: BundleElement) -> BundleElement:
    result = BUNDLE_IDENTITY
    for e in elements:
        result = sd_mul(m, result, e)
    return result
