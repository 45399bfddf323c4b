import dataclasses

import pytest

from optb import matrices as mx
from optb.matrices import IDENTITY, NEG_IDENTITY, Mat2
from optb.torsion import (
    Certificate,
    NoOccurrence,
    SynthesisFailure,
    cancel_negative_occurrence,
    decide,
    exponent_counts,
    homology_balanced,
    synthesize,
    verify_ambient,
    verify_fiber,
)
from optb.words import EMPTY, Letter, Word, concat, conjugate

W = Word.parse
TRACE_ONE = Mat2(1, -1, 1, 0)
SWEEP = [A for A in mx.sl2(5) if A.trace < 2]


@pytest.fixture(scope="module")
def certificates():
    return {A: synthesize(A) for A in SWEEP}


def test_decide_biorderable():
    assert decide(Mat2(2, 1, 1, 1)).biorderable
    assert decide(IDENTITY).biorderable
    assert decide(Mat2(1, 1, 0, 1)).certificate is None


def test_decide_trace_one():
    d = decide(TRACE_ONE)
    assert not d.biorderable
    assert d.certificate.g == W("x")


def test_trace_one_certificate():
    cert = synthesize(TRACE_ONE)
    assert sorted(n for _, n in cert.terms) == [0, 3]
    assert cert.terms[0] == (EMPTY, 0)
    assert cert.normal.n == TRACE_ONE
    assert verify_fiber(cert) and verify_ambient(cert)


def test_other_trace_one_normal_form_is_moved():
    cert = synthesize(Mat2(1, 1, -1, 0))
    assert cert.normal.n == TRACE_ONE
    assert mx.conjugate_by(cert.normal.p, cert.matrix) == TRACE_ONE


def test_a_zero_branch():
    cert = synthesize(Mat2(0, -1, 1, 0))
    assert cert.branch == "a0"
    assert sorted(n for _, n in cert.terms) == [0, 2]
    assert verify_fiber(cert)


def test_negative_identity_early_exit():
    cert = synthesize(NEG_IDENTITY)
    assert cert.branch == "negative"
    assert [n for _, n in cert.terms] == [1, 0]
    assert homology_balanced(cert)
    assert verify_fiber(cert) and verify_ambient(cert)


def test_synthesize_rejects_biorderable():
    with pytest.raises(ValueError):
        synthesize(Mat2(2, 1, 1, 1))


def test_cancel_negative_occurrence_examples():
    q, w = cancel_negative_occurrence(W("yXy"))
    assert (str(q), str(w)) == ("yy", "Y")
    assert cancel_negative_occurrence(W("X")) == (EMPTY, EMPTY)
    q1, w1 = cancel_negative_occurrence(W("XyX"))
    assert (str(q1), str(w1)) == ("Xy", "")
    q2, w2 = cancel_negative_occurrence(q1)
    assert (str(q2), str(w2)) == ("y", "Y")
    with pytest.raises(NoOccurrence):
        cancel_negative_occurrence(W("xyy"))


@pytest.mark.parametrize("q", ["yXy", "XyX", "yXXyX", "yyXyX", "XYXYX", "xyXXXXX"])
def test_cancel_identity_and_measure(q):
    Q = W(q)
    Q2, w = cancel_negative_occurrence(Q)
    assert concat(Q, conjugate(W("x"), w)) == Q2
    assert Q2.letters.count(Letter.X) == Q.letters.count(Letter.X) - 1
    assert Q2.letters.count(Letter.x) <= Q.letters.count(Letter.x)


def test_sweep_total(certificates):
    for A, cert in certificates.items():
        assert verify_fiber(cert), A
        assert verify_ambient(cert), A
        assert homology_balanced(cert), A
        assert cert.g == W("x")


def test_all_branches_covered(certificates):
    assert {c.branch for c in certificates.values()} == {"trace1", "a0", "negative"}


def test_exponent_multiset(certificates):
    for cert in certificates.values():
        n = cert.normal.n
        counts = exponent_counts(cert)
        if cert.branch == "trace1":
            assert counts == {0: 1, 3: 1}
        elif cert.branch == "a0":
            assert counts == {0: 1, 2: 1}
        elif n.c == 0:
            assert counts == {1: 1, 0: abs(n.a)}
        else:
            assert n.a <= n.d <= 0
            assert counts == {1: 1, -1: 1, 0: abs(n.a) + abs(n.d)}
            assert abs(n.a) + abs(n.d) == abs(n.trace)


def test_verify_rejects_trivial_g():
    cert = dataclasses.replace(synthesize(TRACE_ONE), g=EMPTY)
    assert not verify_fiber(cert)
    assert not verify_ambient(cert)


def test_verify_rejects_mutated_conjugator():
    cert = synthesize(TRACE_ONE)
    (w0, n0), (w1, n1) = cert.terms
    # YX -> YY changes the conjugated element
    assert str(w1) == "YX"
    bad = dataclasses.replace(cert, terms=((w0, n0), (W("YY"), n1)))
    assert not verify_fiber(bad)
    assert not verify_ambient(bad)


def test_verify_rejects_inconsistent_normal_form():
    cert = synthesize(Mat2(-5, 2, 2, -1))
    bad = dataclasses.replace(cert, matrix=Mat2(-1, 0, 0, -1))
    assert not verify_fiber(bad) and not verify_ambient(bad)


def test_json_roundtrip(certificates):
    for cert in list(certificates.values())[::9]:
        back = Certificate.from_json(cert.to_json())
        assert back == cert
        assert verify_fiber(back) and verify_ambient(back)


def test_json_rejects_bad_exponent():
    data = synthesize(TRACE_ONE).to_json()
    data["terms"][1]["N"] = "3"
    with pytest.raises(ValueError):
        Certificate.from_json(data)


def test_synthesis_failure_carries_state():
    err = SynthesisFailure("boom", k=3)
    assert err.state == {"k": 3}
    assert "k=3" in str(err)
