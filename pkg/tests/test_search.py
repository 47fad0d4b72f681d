import itertools
import json

import pytest

from ppric.codes import make_code, verify_exact
from ppric.errors import CapacityError, ParameterError
from ppric.search import (
    SearchResult,
    conjecture_probe,
    exact_n_search,
    minimal_codes_enumerate,
)


def brute_force_min(L, s, r):
    """Reference minimum over every subset of the weight class, smallest
    first.  Only viable for tiny weight classes."""
    supports = list(itertools.combinations(range(1, L + 1), s))
    for m in range(1, len(supports) + 1):
        hits = []
        for combo in itertools.combinations(supports, m):
            code = make_code(L, s, r, [set(c) for c in combo])
            if verify_exact(code).is_ppric:
                hits.append(code)
        if hits:
            return m, hits
    raise AssertionError("weight class itself is not a code?")


def test_small_pinned_values():
    assert exact_n_search(5, 2, 0).n_exact == 4
    assert exact_n_search(6, 2, 0).n_exact == 3
    assert exact_n_search(7, 3, 0).n_exact == 5
    assert exact_n_search(7, 2, 1).n_exact == 5
    assert exact_n_search(6, 1, 3).n_exact == 6


def test_witness_verifies_and_serializes():
    res = exact_n_search(7, 3, 0)
    assert verify_exact(res.witness).is_ppric
    assert res.witness.size == res.n_exact
    doc = json.loads(res.dumps())
    assert doc["n_exact"] == 5
    assert doc["witness"]["codewords"][0] == "1110000"  # pinned first word


def test_matches_brute_force_6_2_1():
    m, _ = brute_force_min(6, 2, 1)
    assert exact_n_search(6, 2, 1).n_exact == m == 6


def test_enumerate_matches_brute_force_6_2_1():
    # every minimal code whose first word is {1,2}, in both engines
    m, hits = brute_force_min(6, 2, 1)
    first = frozenset({1, 2})
    expect = {
        tuple(sorted(w.support() for w in code.codewords))
        for code in hits
        if first in {w.support() for w in code.codewords}
    }
    got = {
        tuple(sorted(w.support() for w in code.codewords))
        for code in minimal_codes_enumerate(6, 2, 1, m)
    }
    assert got == expect and got


def test_regression_9_3_1_minimum_is_seven():
    # the divisibility gap: no 6-codeword code exists here
    res = exact_n_search(9, 3, 1)
    assert res.n_exact == 7
    assert verify_exact(res.witness).is_ppric


@pytest.mark.slow
def test_regression_9_3_1_exhausts_size_six():
    assert minimal_codes_enumerate(9, 3, 1, 6) == []


def test_deterministic_witness():
    a = exact_n_search(8, 3, 0)
    b = exact_n_search(8, 3, 0)
    assert a.dumps() == b.dumps()
    assert a.n_exact == 4


def test_jobs_fanout_matches_serial():
    serial = exact_n_search(9, 4, 0)
    fanned = exact_n_search(9, 4, 0, jobs=4)
    assert serial.n_exact == fanned.n_exact == 5
    assert serial.witness == fanned.witness


def test_size_cap():
    res = exact_n_search(6, 2, 0, size_cap=3)
    assert res.n_exact == 3
    with pytest.raises(ParameterError):
        exact_n_search(6, 2, 0, size_cap=1)  # below the lower bound
    with pytest.raises(CapacityError):
        exact_n_search(9, 3, 1, size_cap=6)  # cap sits between lb 6 and N 7


def test_node_budget():
    with pytest.raises(CapacityError):
        exact_n_search(9, 3, 1, node_budget=100)


def test_pool_cap():
    with pytest.raises(CapacityError):
        exact_n_search(40, 12, 0)


def test_s_zero_trivial():
    res = exact_n_search(5, 0, 2)
    assert res.n_exact == 1
    assert res.witness.codewords[0].mask == 0


def test_enumerate_oversized_raises():
    # m strictly above the true minimum is detectable: some branch runs out
    # of uncovered elements with slots left
    with pytest.raises(ParameterError):
        minimal_codes_enumerate(6, 2, 0, 5)


def test_conjecture_probe():
    rep = conjecture_probe(6, 2, 1)
    assert rep.n_exact == 6
    assert rep.expected == 4  # r + 3
    assert rep.min_weights and all(w >= 1 for w in rep.min_weights)
    doc = rep.to_json_dict()
    assert doc["L"] == 6
    assert doc["expected_weight"] == 4
    assert doc["min_weight_always_expected"] == rep.min_weight_always_expected
