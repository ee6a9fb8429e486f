import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tripattern import BinaryMatrix
from tripattern.errors import ParseError, PreconditionError
from tripattern.generators import half_graph
from tripattern.patterns import (
    ALL_PATTERNS,
    INHOMOGENEOUS_PATTERNS,
    ExtractionCertificate,
    PatternKind,
    TriPattern,
    canonical_kind,
    classify,
    is_switch_matrix,
    make_tri_matrix,
    parse_certificate,
    serialize_certificate,
    verify_certificate,
)
from tripattern.vcdim import matrix_vc_dimension

from .conftest import binary_matrices

patterns = st.sampled_from(ALL_PATTERNS)


def test_make_tri_matrix_examples():
    assert make_tri_matrix(TriPattern(0, 1, 0), 3) == BinaryMatrix.identity(3)
    assert make_tri_matrix(TriPattern(1, 0, 1), 2).tolist() == [[0, 1], [1, 0]]
    assert make_tri_matrix(TriPattern(1, 1, 0), 3).tolist() == [[1, 1, 1], [0, 1, 1], [0, 0, 1]]
    assert make_tri_matrix(TriPattern(1, 1, 0), 0).shape == (0, 0)


def test_classify_examples():
    assert classify(BinaryMatrix.identity(4)) == (0, 1, 0)
    assert classify(BinaryMatrix.from_lists([[1, 1], [0, 1]])) == (1, 1, 0)
    assert classify(BinaryMatrix.from_lists([[1, 1, 0], [0, 1, 0], [0, 0, 1]])) is None
    assert classify(BinaryMatrix.ones(3, 3)) == (1, 1, 1)
    assert classify(BinaryMatrix.from_lists([[0]])) == (0, 0, 0)


def test_classify_rejects_bad_shapes():
    with pytest.raises(PreconditionError):
        classify(BinaryMatrix.zeros(2, 3))
    with pytest.raises(PreconditionError):
        classify(BinaryMatrix.zeros(0, 0))


@given(patterns, st.integers(2, 20))
def test_classify_inverts_make(p, n):
    assert classify(make_tri_matrix(p, n)) == p


@given(binary_matrices(max_rows=5, max_cols=5, min_rows=1, min_cols=1))
def test_classify_agrees_with_make(A):
    if A.m != A.n:
        return
    p = classify(A)
    hits = [q for q in ALL_PATTERNS if make_tri_matrix(q, A.n) == A]
    if A.n == 1:
        assert p == (A.entry(0, 0),) * 3
    elif p is None:
        assert hits == []
    else:
        assert hits == [p]


def test_canonical_kind_table():
    kinds = {p: canonical_kind(p) for p in ALL_PATTERNS}
    assert kinds[(0, 1, 0)] is PatternKind.MATCHING
    assert kinds[(1, 0, 1)] is PatternKind.CO_MATCHING
    for p in [(1, 1, 0), (0, 1, 1), (1, 0, 0), (0, 0, 1)]:
        assert kinds[p] is PatternKind.HALF_GRAPH
    assert kinds[(0, 0, 0)] is kinds[(1, 1, 1)] is PatternKind.HOMOGENEOUS
    assert len(INHOMOGENEOUS_PATTERNS) == 6
    with pytest.raises(ValueError):
        canonical_kind(TriPattern(1, 0, None))


@pytest.mark.parametrize("p", [TriPattern(1, 0, 0), TriPattern(0, 0, 1)])
@pytest.mark.parametrize("n", [2, 3, 6, 9])
def test_strict_chain_contains_half_graph(p, n):
    A = make_tri_matrix(p, n)
    # drop the first row and the last column (or vice versa)
    if p == (1, 0, 0):
        B = A.submatrix(range(n - 1), range(1, n))
    else:
        B = A.submatrix(range(1, n), range(n - 1))
    assert classify(B) in {(1, 1, 0), (0, 1, 1)} or n - 1 == 1


@pytest.mark.parametrize("p", ALL_PATTERNS)
def test_tri_matrices_have_small_vc(p):
    for n in range(1, 13):
        assert matrix_vc_dimension(make_tri_matrix(p, n)) <= 2


def test_verify_examples():
    I5 = BinaryMatrix.identity(5)
    good = ExtractionCertificate([0, 1, 2], [0, 1, 2], TriPattern(0, 1, 0))
    assert verify_certificate(I5, good)
    bad = ExtractionCertificate([0, 1, 2], [0, 1, 2], TriPattern(1, 0, 1))
    check = verify_certificate(I5, bad)
    assert not check and check.entry == (0, 0)

    H = half_graph(4)
    check = verify_certificate(H, ExtractionCertificate([0, 1], [2, 3], TriPattern(1, 1, 0)))
    assert not check
    assert check.entry == (1, 0)
    assert "claimed gamma=0, found 1 at relative (1,0)" in check.reason


def test_verify_structural_violations():
    I4 = BinaryMatrix.identity(4)
    p = TriPattern(0, 1, 0)
    assert "duplicate" in verify_certificate(I4, ExtractionCertificate([0, 0], [0, 1], p)).reason
    assert "out of range" in verify_certificate(I4, ExtractionCertificate([0, 4], [0, 1], p)).reason
    assert "minimum" in verify_certificate(I4, ExtractionCertificate([0], [0], p)).reason
    assert "columns" in verify_certificate(I4, ExtractionCertificate([0, 1], [0], p)).reason
    ones = BinaryMatrix.ones(3, 3)
    assert "alpha == beta" in verify_certificate(ones, ExtractionCertificate([0, 1], [0, 1], TriPattern(1, 1, 1))).reason
    wrong_kind = ExtractionCertificate([0, 1], [0, 1], TriPattern(0, 1, 0), PatternKind.HALF_GRAPH)
    assert "kind" in verify_certificate(I4, wrong_kind).reason


@given(binary_matrices(max_rows=6, max_cols=6, min_rows=2, min_cols=2), patterns, st.randoms(use_true_random=False))
def test_verify_matches_classify(A, p, rnd):
    k = rnd.randint(2, min(A.m, A.n))
    rows = rnd.sample(range(A.m), k)
    cols = rnd.sample(range(A.n), k)
    check = verify_certificate(A, ExtractionCertificate(rows, cols, p))
    expected = classify(A.submatrix(rows, cols)) == p and p.alpha != p.beta
    assert bool(check) == expected


def test_is_switch_matrix_examples():
    assert is_switch_matrix(BinaryMatrix.from_lists([[0, 1]]))
    assert is_switch_matrix(BinaryMatrix.from_lists([[0, 1, 1, 1], [0, 0, 0, 1]]))
    assert not is_switch_matrix(BinaryMatrix.from_lists([[0, 1, 0, 1], [0, 0, 0, 1]]))
    assert not is_switch_matrix(BinaryMatrix.from_lists([[0, 1, 1]]))
    assert not is_switch_matrix(BinaryMatrix.from_lists([[1, 0]]))
    assert is_switch_matrix(BinaryMatrix.zeros(0, 0))


@given(st.lists(st.integers(0, 50), min_size=2, max_size=8, unique=True), st.sampled_from(INHOMOGENEOUS_PATTERNS))
def test_certificate_round_trip(idx, p):
    k = len(idx) // 2
    cert = ExtractionCertificate(idx[:k], idx[k:2 * k], p)
    text = serialize_certificate(cert)
    assert parse_certificate(text) == cert
    assert serialize_certificate(parse_certificate(text)) == text


def test_certificate_text_format():
    cert = ExtractionCertificate([3, 1], [0, 5], TriPattern(1, 0, 1))
    assert serialize_certificate(cert) == "2\npattern 1 0 1\nrows 3 1\ncols 0 5\n"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2\npattern 1 0 1\nrows 3 1\n",
        "2\npattern 1 0 2\nrows 3 1\ncols 0 5\n",
        "2\npatern 1 0 1\nrows 3 1\ncols 0 5\n",
        "2\npattern 1 0 1\nrows 3\ncols 0 5\n",
        "2\npattern 1 0 1\nrows 3 x\ncols 0 5\n",
        "2\npattern 1 0 1\ncols 0 5\nrows 3 1\n",
        "2 2\npattern 1 0 1\nrows 3 1\ncols 0 5\n",
        "2\npattern 1 0 1\nrows 3 -1\ncols 0 5\n",
    ],
)
def test_parse_certificate_rejects(text):
    with pytest.raises(ParseError):
        parse_certificate(text)
