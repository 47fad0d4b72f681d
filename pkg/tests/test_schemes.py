import unittest

from ppric.codes import make_code, verify_exact
from ppric.construct import build_disjoint, build_extremal
from ppric.covering import fano_plane
from ppric.errors import ParameterError
from ppric.schemes import (
    JohnsonCoveringCode,
    JohnsonPpricCode,
    johnson_construction,
    johnson_exact_check,
    johnson_verify,
    product_covering_code,
    qary_verify,
    verify_johnson_covering,
    verify_symmetric_sphere_identity,
)
from ppric.words import BinaryWord, JohnsonWord, QaryWord, johnson_distance


class SphereIdentityTests(unittest.TestCase):

    def test_binary(self):
        x = BinaryWord.from_string("10110100")
        self.assertTrue(verify_symmetric_sphere_identity(x, 1, 2))
        self.assertTrue(verify_symmetric_sphere_identity(x, 2, 1))

    def test_qary(self):
        x = QaryWord(3, (0, 2, 1, 0, 2, 1))
        self.assertTrue(verify_symmetric_sphere_identity(x, 0, 2))
        self.assertTrue(verify_symmetric_sphere_identity(x, 1, 1))

    def test_johnson(self):
        # diameter is min(L, n-L) = 6, exactly r + 2s + 1
        x = JohnsonWord(13, frozenset({1, 2, 3, 4, 5, 6}))
        self.assertTrue(verify_symmetric_sphere_identity(x, 1, 2))

    def test_regime_enforced(self):
        # diameter 6 < r + 2s + 1 = 7: outside the theorem, refuse to scan
        x = BinaryWord.from_string("101101")
        with self.assertRaises(ParameterError):
            verify_symmetric_sphere_identity(x, 2, 2)
        y = JohnsonWord(10, frozenset({1, 2, 3, 4}))  # diameter min(4, 6) = 4
        with self.assertRaises(ParameterError):
            verify_symmetric_sphere_identity(y, 2, 1)

    def test_s_zero_trivial(self):
        self.assertTrue(
            verify_symmetric_sphere_identity(BinaryWord(5, 0), 2, 0))


class QaryLiftTests(unittest.TestCase):

    def test_disjoint_code_lifts(self):
        code = build_disjoint(6, 2, 0)
        self.assertTrue(verify_exact(code).is_ppric)
        for q in (3, 4):
            verdict = qary_verify(code, q)
            self.assertTrue(verdict.is_ppric, f"lift failed at q={q}")

    def test_extremal_code_lifts(self):
        code = build_extremal(2, 1, 6)
        self.assertTrue(qary_verify(code, 3).is_ppric)

    def test_negative_case_stays_negative(self):
        # every codeword through coordinate 1, so e_1 violates in any alphabet
        bad = make_code(5, 2, 0, [{1, 2}, {1, 3}, {1, 4}, {1, 5}])
        verdict = qary_verify(bad, 3)
        self.assertFalse(verdict.is_ppric)
        self.assertIsNotNone(verdict.violator)

    def test_q_two_agrees_with_binary(self):
        code = build_disjoint(6, 2, 0)
        self.assertTrue(qary_verify(code, 2).is_ppric)
        with self.assertRaises(ParameterError):
            qary_verify(code, 1)


class JohnsonCodeTests(unittest.TestCase):

    def test_construction_pinned(self):
        code = johnson_construction(8, 4, 1, 0)
        self.assertEqual(code.size, 3)
        self.assertEqual(
            [sorted(v.elements) for v in code.codewords],
            [[2, 3, 4, 5], [1, 3, 4, 6], [1, 2, 4, 7]],
        )
        self.assertTrue(johnson_verify(code).is_ppric)

    def test_construction_r1(self):
        code = johnson_construction(14, 5, 1, 1)
        self.assertEqual(code.size, 5)
        self.assertTrue(johnson_verify(code).is_ppric)

    def test_construction_custom_center(self):
        x = JohnsonWord(8, frozenset({2, 4, 6, 8}))
        code = johnson_construction(8, 4, 1, 0, x=x)
        self.assertEqual(code.x, x)
        self.assertTrue(johnson_verify(code).is_ppric)

    def test_construction_regime(self):
        with self.assertRaises(ParameterError):
            johnson_construction(8, 4, 2, 0)  # L < s(2r+3)
        with self.assertRaises(ParameterError):
            johnson_construction(7, 4, 1, 0)  # n < 2L

    def test_dropping_a_codeword_breaks_it(self):
        code = johnson_construction(8, 4, 1, 0)
        crippled = JohnsonPpricCode(8, 4, 1, 0, code.x, code.codewords[:2])
        verdict = johnson_verify(crippled)
        self.assertFalse(verdict.is_ppric)
        # two codewords leave a covered word strictly outside B(x, r)
        self.assertGreater(johnson_distance(code.x, verdict.violator), 0)

    def test_json_round_trip(self):
        code = johnson_construction(10, 5, 1, 1)
        again = JohnsonPpricCode.loads(code.dumps(pretty=True))
        self.assertEqual(again, code)

    def test_validation(self):
        x = JohnsonWord(8, frozenset({1, 2, 3, 4}))
        off = JohnsonWord(8, frozenset({5, 6, 7, 8}))  # distance 4, not s
        with self.assertRaises(ParameterError):
            JohnsonPpricCode(8, 4, 1, 0, x, (off,))
        with self.assertRaises(ParameterError):
            JohnsonPpricCode(7, 4, 1, 0, JohnsonWord(7, frozenset({1, 2, 3, 4})),
                             (JohnsonWord(7, frozenset({1, 2, 3, 5})),))

    def test_exact_check(self):
        self.assertTrue(johnson_exact_check(8, 4, 1, 0))
        self.assertTrue(johnson_exact_check(12, 4, 1, 0))
        with self.assertRaises(ParameterError):
            johnson_exact_check(10, 4, 1, 1)  # 2r+3 only claimed for L >= 5s


class JohnsonCoveringTests(unittest.TestCase):

    def test_product_of_fano_planes(self):
        fano = fano_plane()
        code = product_covering_code(fano, fano)
        self.assertEqual((code.n, code.L, code.k, code.t), (14, 7, 3, 2))
        self.assertEqual(code.size, 49)
        verdict = verify_johnson_covering(code)
        self.assertTrue(verdict.at_least_one)
        self.assertTrue(verdict.exactly_one)  # Steiner inputs, so unique

    def test_product_dimension_mismatch(self):
        from ppric.covering import all_pairs_design
        with self.assertRaises(ParameterError):
            product_covering_code(fano_plane(), all_pairs_design(5))

    def test_head_count_validation(self):
        # codeword must have exactly L-k ones among the first L coordinates
        with self.assertRaises(ParameterError):
            JohnsonCoveringCode(
                14, 7, 3, 2,
                (JohnsonWord(14, frozenset({1, 2, 3, 8, 9, 10, 11})),))

    def test_incomplete_family_fails_at_least_one(self):
        fano = fano_plane()
        code = product_covering_code(fano, fano)
        crippled = JohnsonCoveringCode(14, 7, 3, 2, code.codewords[:10])
        verdict = verify_johnson_covering(crippled)
        self.assertFalse(verdict.at_least_one)

    def test_json_shape(self):
        code = product_covering_code(fano_plane(), fano_plane())
        doc = code.to_json_dict()
        self.assertEqual(doc["n"], 14)
        self.assertEqual(len(doc["codewords"]), 49)
        self.assertEqual(len(doc["codewords"][0]), 7)


if __name__ == "__main__":
    unittest.main()
