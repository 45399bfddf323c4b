"""Generalized-torsion certificates for once-punctured torus bundles.

A certificate names a fiber element ``g`` and terms ``(w_i, N_i)`` such that

    prod_i  w_i . phi^N_i(g) . w_i^-1  ==  1

in the fiber group, where ``phi`` is the lift of the normal-form monodromy.
By the semidirect structure of the bundle group this makes ``g`` a
generalized torsion element there, so the bundle group is not bi-orderable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import matrices as mx
from .matrices import Mat2, NormalForm, NotFound
from .monodromy import MappingClass, apply, invert_class, lift, mc_power
from .semidirect import BUNDLE_IDENTITY, fiber, sd_product, tau
from .words import (
    EMPTY,
    Letter,
    Word,
    X_WORD,
    abelianize,
    concat,
    invert,
    product,
    solve_conjugacy,
)

TRACE_ONE_TARGET = Mat2(1, -1, 1, 0)
# normal-form search bound, then the escalation used if it comes up empty
SEARCH_BOUNDS = (mx.DEFAULT_NORMAL_FORM_BOUND, mx.DEFAULT_TUNNEL_BOUND)


class SynthesisFailure(RuntimeError):
    """Raised when a construction step fails; always a convention bug."""

    def __init__(self, message: str, **state):
        detail = ", ".join(f"{k}={v}" for k, v in state.items())
        super().__init__(f"{message} ({detail})" if detail else message)
        self.state = state


class NoOccurrence(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    matrix: Mat2
    normal: NormalForm
    g: Word
    terms: Tuple[Tuple[Word, int], ...]
    branch: str = field(default="", compare=False)

    def to_json(self) -> dict:
        return {
            "matrix": self.matrix.rows(),
            "normal_form": self.normal.to_json(),
            "g": str(self.g),
            "terms": [{"w": str(w), "N": n} for w, n in self.terms],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        terms = data["terms"]
        if not isinstance(terms, list):
            raise ValueError("terms must be a list")
        parsed = []
        for t in terms:
            n = t["N"]
            if not isinstance(n, int) or isinstance(n, bool):
                raise ValueError(f"exponent {n!r} is not an integer")
            parsed.append((Word.parse(t["w"]), n))
        return cls(
            Mat2.from_rows(data["matrix"]),
            NormalForm.from_json(data["normal_form"]),
            Word.parse(data["g"]),
            tuple(parsed),
        )


@dataclass(frozen=True)
class Decision:
    matrix: Mat2
    certificate: Optional[Certificate] = None

    @property
    def biorderable(self) -> bool:
        return self.certificate is None


def decide(A: Mat2) -> Decision:
    """Bi-orderable iff trace >= 2; otherwise return a verified certificate."""
    if A.det != 1:
        raise ValueError(f"monodromy must have det +1, got {A}")
    if A.trace >= 2:
        return Decision(A)
    return Decision(A, synthesize(A))


def cancel_negative_occurrence(Q: Word) -> Tuple[Word, Word]:
    """Remove the last ``X`` of ``Q`` by multiplying with a conjugate of ``x``.

    Splitting ``Q = alpha X beta`` returns ``(alpha.beta, beta^-1)``, so that
    ``Q . w x w^-1 == Q'``.
    """
    letters = Q.letters
    for i in range(len(letters) - 1, -1, -1):
        if letters[i] == Letter.X:
            alpha, beta = Word(letters[:i]), Word(letters[i + 1:])
            return concat(alpha, beta), invert(beta)
    raise NoOccurrence(f"no x^-1 in {Q}")


def _normal_form(A: Mat2) -> NormalForm:
    for bound in SEARCH_BOUNDS:
        try:
            return mx.morimoto_normal_form(A, bound)
        except NotFound:
            continue
    raise SynthesisFailure("normal form not found", matrix=A, bounds=SEARCH_BOUNDS)


def _trace_one_form(nf: NormalForm) -> NormalForm:
    for bound in SEARCH_BOUNDS:
        q = mx.bounded_gl2_conjugacy(nf.n, TRACE_ONE_TARGET, bound)
        if q is not None:
            return NormalForm(TRACE_ONE_TARGET, mx.mul(q, nf.p))
    raise SynthesisFailure("trace-one matrix not conjugate to target", n=nf.n)


def _reverse_orientation_terms(phi: MappingClass, k: int) -> List[Tuple[Word, int]]:
    # phi^k(x) is conjugate to x^-1; pair it with x itself
    u = apply(mc_power(phi, k), X_WORD)
    h = solve_conjugacy(invert(X_WORD), u)
    if h is None:
        raise SynthesisFailure("phi^k(x) is not conjugate to x^-1", k=k, image=u)
    return [(EMPTY, 0), (h, k)]


def _absorb(Q: Word) -> Tuple[Word, List[Word]]:
    """Strip every ``X`` from the cyclic core of ``Q`` using conjugates of ``x``.

    Works on the core ``C`` of ``Q = s C s^-1`` so that stem letters are never
    touched; conjugators returned are ``s . w``.  Returns the final product and
    the conjugators in multiplication order.
    """
    letters = Q.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == -letters[j]:
        i += 1
        j -= 1
    stem, core = Word(letters[:i]), Word(letters[i:j + 1])
    conjugators = []
    while Letter.X in core.letters:
        core, w = cancel_negative_occurrence(core)
        conjugators.append(concat(stem, w))
    return product((stem, core, invert(stem))), conjugators


def _negative_trace_terms(phi: MappingClass) -> List[Tuple[Word, int]]:
    q, ws = _absorb(apply(phi, X_WORD))
    terms = [(EMPTY, 1)] + [(w, 0) for w in ws]
    if not q:
        return terms
    q2, ws2 = _absorb(apply(invert_class(phi), X_WORD))
    h = solve_conjugacy(invert(q), q2)
    if h is None:
        raise SynthesisFailure("phase products do not cancel", phase1=q, phase2=q2)
    terms.append((h, -1))
    terms += [(concat(h, w), 0) for w in ws2]
    return terms


def synthesize(A: Mat2) -> Certificate:
    if A.det != 1 or A.trace >= 2:
        raise ValueError(f"synthesis needs det +1 and trace < 2, got {A}")
    nf = _normal_form(A)
    n = nf.n
    if n.trace == 1:
        nf = _trace_one_form(nf)
        terms, branch = _reverse_orientation_terms(lift(nf.n), 3), "trace1"
    elif n.a == 0:
        terms, branch = _reverse_orientation_terms(lift(n), 2), "a0"
    else:
        terms, branch = _negative_trace_terms(lift(n)), "negative"
    cert = Certificate(A, nf, X_WORD, tuple(terms), branch)
    if not (verify_fiber(cert) and homology_balanced(cert)):
        raise SynthesisFailure("certificate does not verify", matrix=A, normal=nf.n, terms=terms)
    return cert


# ---------------------------------------------------------------------------
# Verification


def _consistent(cert: Certificate) -> bool:
    try:
        return (
            cert.normal.n.det == 1
            and mx.conjugate_by(cert.normal.p, cert.matrix) == cert.normal.n
            and bool(cert.g)
            and len(cert.terms) > 0
        )
    except (ValueError, OverflowError):
        return False


def homology_balanced(cert: Certificate) -> bool:
    v = abelianize(cert.g)
    total = [0, 0]
    for _, n in cert.terms:
        img = mx.apply_vec(mx.power(cert.normal.n, n), v)
        total[0] += img[0]
        total[1] += img[1]
    return total == [0, 0]


def verify_fiber(cert: Certificate) -> bool:
    """Check the conjugate product by free reduction in the fiber group."""
    if not _consistent(cert):
        return False
    phi = lift(cert.normal.n)
    powers: Dict[int, MappingClass] = {}
    factors = []
    for w, n in cert.terms:
        if n not in powers:
            powers[n] = mc_power(phi, n)
        factors += [w, apply(powers[n], cert.g), invert(w)]
    return not product(factors)


def verify_ambient(cert: Certificate) -> bool:
    """Check the same product as tau-conjugates inside the bundle group."""
    if not _consistent(cert):
        return False
    phi = lift(cert.normal.n)
    g = fiber(cert.g)
    total = BUNDLE_IDENTITY
    for w, n in cert.terms:
        total = sd_product(phi, total, fiber(w), tau(n), g, tau(-n), fiber(invert(w)))
    return total == BUNDLE_IDENTITY


def exponent_counts(cert: Certificate) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for _, n in cert.terms:
        counts[n] = counts.get(n, 0) + 1
    return counts
