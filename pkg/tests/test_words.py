import math

import pytest
from hypothesis import given, strategies as st

from ppric.errors import CapacityError, FormatError, ParameterError
from ppric.words import (
    BinaryWord,
    JohnsonWord,
    QaryWord,
    SchemeParams,
    ball_size,
    ball_vector,
    binom,
    diameter,
    distance,
    enumerate_ball,
    enumerate_sphere,
    enumerate_weight_class,
    hamming_distance,
    johnson_distance,
    johnson_sphere_size,
    min_weight_member,
    sphere_size,
    weight_vectors,
    xor_translate,
)


def test_scheme_params_admissibility():
    SchemeParams(5, 2, 0)
    SchemeParams(6, 2, 1)
    with pytest.raises(ParameterError):
        SchemeParams(5, 2, 1)  # L < 2s+r+1
    with pytest.raises(ParameterError):
        SchemeParams(4, 2, 0)
    with pytest.raises(ParameterError):
        SchemeParams(6, 2, -1)


def test_binary_word_roundtrip():
    w = BinaryWord.from_string("10110")
    assert w.length == 5
    assert w.weight == 3
    assert w.to_string() == "10110"
    # leftmost character is coordinate 1
    assert w.mask & 1
    with pytest.raises(FormatError):
        BinaryWord.from_string("10x1")
    with pytest.raises(FormatError):
        BinaryWord.from_string("")


def test_qary_word_roundtrip():
    w = QaryWord.from_string(3, "0,2,1,0")
    assert w.to_string() == "0,2,1,0"
    assert w.length == 4
    with pytest.raises(ParameterError):
        QaryWord.from_string(3, "0,3,1")  # symbol out of range
    with pytest.raises(FormatError):
        QaryWord.from_string(3, "0,,1")


def test_johnson_word_roundtrip():
    w = JohnsonWord.from_string(8, "{1,2,5,8}")
    assert w.elements == frozenset({1, 2, 5, 8})
    assert w.to_string() == "{1,2,5,8}"
    with pytest.raises(ParameterError):
        JohnsonWord(8, frozenset({0, 1, 2}))  # elements are 1-based
    with pytest.raises(ParameterError):
        JohnsonWord(6, frozenset({1, 2, 3, 4}))  # needs 2L <= n


def test_distances():
    a = BinaryWord.from_string("1100")
    b = BinaryWord.from_string("0110")
    assert hamming_distance(a, b) == 2
    assert distance(a, b) == 2
    qa = QaryWord.from_string(3, "0,1,2")
    qb = QaryWord.from_string(3, "0,2,2")
    assert hamming_distance(qa, qb) == 1
    ja = JohnsonWord(8, frozenset({1, 2, 3, 4}))
    jb = JohnsonWord(8, frozenset({1, 2, 5, 6}))
    assert johnson_distance(ja, jb) == 2
    assert distance(ja, jb) == 2
    with pytest.raises(ParameterError):
        distance(a, BinaryWord.from_string("11000"))


def test_diameter():
    assert diameter("binary", 7) == 7
    assert diameter("qary", 7, q=5) == 7
    assert diameter("johnson", 4, n=9) == 4
    assert diameter("johnson", 6, n=12) == 6


def test_sphere_and_ball_sizes():
    assert sphere_size(7, 3) == math.comb(7, 3)
    assert ball_size(7, 2) == 1 + 7 + 21
    got = sum(1 for _ in enumerate_sphere(BinaryWord(7, 0), 3))
    assert got == sphere_size(7, 3)
    got = sum(1 for _ in enumerate_ball(BinaryWord(7, 0), 2))
    assert got == ball_size(7, 2)


def test_enumerate_weight_class():
    words = list(enumerate_weight_class(6, 2))
    assert len(words) == 15
    assert all(w.weight == 2 for w in words)
    assert len({w.mask for w in words}) == 15


def test_johnson_sphere_enumeration():
    x = JohnsonWord(9, frozenset({1, 2, 3, 4}))
    got = sum(1 for _ in enumerate_sphere(x, 2))
    assert got == johnson_sphere_size(9, 4, 2) == math.comb(4, 2) * math.comb(5, 2)


def test_qary_sphere_enumeration():
    x = QaryWord(3, (0, 0, 0, 0))
    got = sum(1 for _ in enumerate_sphere(x, 2))
    assert got == math.comb(4, 2) * 4  # choose positions, then nonzero symbols


def test_big_vector_layer():
    # the 2^L-bit characteristic-vector helpers agree with word enumeration
    L = 6
    levels = weight_vectors(L)
    assert sum(v.bit_count() for v in levels) == 1 << L
    ball = ball_vector(L, 2)
    assert ball.bit_count() == ball_size(L, 2)
    shifted = xor_translate(ball, 1, L)  # translate by e_1
    members = {i for i in range(1 << L) if shifted >> i & 1}
    assert members == {m ^ 1 for m in range(1 << L) if ball >> m & 1}
    assert min_weight_member(ball, L) == 0
    assert min_weight_member(0, L) is None


def test_binary_cap():
    with pytest.raises(CapacityError):
        list(enumerate_ball(BinaryWord(30, 0), 1))


@given(st.integers(2, 10), st.data())
def test_hamming_metric_axioms(L, data):
    bits = st.integers(0, (1 << L) - 1)
    a = BinaryWord(L, data.draw(bits))
    b = BinaryWord(L, data.draw(bits))
    c = BinaryWord(L, data.draw(bits))
    assert hamming_distance(a, b) == hamming_distance(b, a)
    assert (hamming_distance(a, b) == 0) == (a == b)
    assert hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c)


@given(st.integers(4, 12), st.data())
def test_johnson_metric_axioms(n, data):
    L = n // 2
    subs = st.frozensets(st.integers(1, n), min_size=L, max_size=L)
    a = JohnsonWord(n, data.draw(subs))
    b = JohnsonWord(n, data.draw(subs))
    c = JohnsonWord(n, data.draw(subs))
    assert johnson_distance(a, b) == johnson_distance(b, a)
    assert (johnson_distance(a, b) == 0) == (a == b)
    assert johnson_distance(a, c) <= johnson_distance(a, b) + johnson_distance(b, c)


@given(st.integers(1, 8), st.integers(0, 8))
def test_binom_matches_math(n, k):
    assert binom(n, k) == math.comb(n, k)
