"""
Condition (A)(B)(C) and coprimality witness tests for cyclohodge.criteria

Created on 14 Oct 2026

*** NB: must be saved in UTF-8 format ***

@author: semuadmin
"""

# pylint: disable=line-too-long, invalid-name, missing-docstring, no-member

import unittest

from cyclohodge import (
    InvalidParams,
    NotPrimePower,
    check_conditions,
    condition_row,
    find_coprime_witness,
    scan_condition_implication,
    witness_valid,
)


class CriteriaTest(unittest.TestCase):
    def setUp(self):
        self.maxDiff = None

    def tearDown(self):
        pass

    def testconditionA(self):  # n = q + 1
        rep = check_conditions(9, 8)
        self.assertTrue(rep.holds_A)
        self.assertFalse(rep.holds_B)
        self.assertFalse(rep.holds_C)  # 9 = 1 mod 8
        self.assertTrue(rep.any_holds)
        self.assertEqual(rep.witness, 1)
        self.assertFalse(rep.n_less_than_q)

    def testconditionB(self):
        rep = check_conditions(5, 7)
        self.assertEqual((rep.p, rep.holds_A, rep.holds_B, rep.holds_C), (7, False, True, False))
        self.assertEqual(rep.witness, 2)  # [5/7] = 0 shares 4 with n - 1, [10/7] = 1
        self.assertTrue(rep.n_less_than_q)
        rep = check_conditions(8, 7)  # 8 = 1 mod 7, but n = q + 1
        self.assertEqual((rep.holds_A, rep.holds_B), (True, False))

    def testconditionC(self):
        rep = check_conditions(5, 8)
        self.assertEqual((rep.holds_A, rep.holds_B, rep.holds_C), (False, False, True))
        rep = check_conditions(7, 8)  # 7 = q - 1 mod 2q
        self.assertFalse(rep.holds_C)
        self.assertFalse(rep.any_holds)
        rep = check_conditions(23, 8)  # 23 = q - 1 mod 2q
        self.assertFalse(rep.holds_C)
        rep = check_conditions(15, 8)  # 15 = q - 1 mod q only
        self.assertTrue(rep.holds_C)

    def testnowitness(self):  # 7 = 1 mod 3: [7/3] = 2, [14/3] = 4, both share 2 with 6
        rep = check_conditions(7, 3)
        self.assertFalse(rep.any_holds)
        self.assertIsNone(rep.witness)
        self.assertFalse(rep.witness_exists)
        self.assertIsNone(find_coprime_witness(7, 3))

    def testwitness(self):
        self.assertEqual(find_coprime_witness(4, 5), 2)  # [4/5] = 0, gcd(0, 3) = 3; [8/5] = 1
        self.assertTrue(witness_valid(5, 7, 2))
        self.assertFalse(witness_valid(5, 7, 1))
        self.assertFalse(witness_valid(5, 7, 3))
        self.assertFalse(witness_valid(5, 7, None))
        self.assertFalse(witness_valid(5, 7, 7))

    def testwitnessqplusone(self):  # n = q + 1: [4/3] = 1 is already coprime to 3
        res = check_conditions(4, 3)
        self.assertTrue(res.holds_A)
        self.assertEqual(find_coprime_witness(4, 3), 1)
        self.assertEqual(res.witness, 1)
        self.assertTrue(witness_valid(4, 3, 1))
        self.assertTrue(witness_valid(4, 3, 2))  # [8/3] = 2, gcd(2, 3) = 1

    def testinvalid(self):
        with self.assertRaises(InvalidParams):
            check_conditions(6, 9)
        with self.assertRaises(InvalidParams):
            check_conditions(3, 7)
        with self.assertRaises(NotPrimePower):
            check_conditions(5, 10)

    def testconditionrow(self):
        (cell, res), = condition_row((9, 8))
        self.assertEqual(cell, (9, 8))
        self.assertTrue(res["ok"])
        self.assertTrue(res["exclusive_BC"])
        self.assertFalse(res["converse_fails"])
        (_, res), = condition_row((7, 3))
        self.assertTrue(res["ok"])  # nothing claimed when no condition holds

    def testimplication(self):
        rep = scan_condition_implication(40, 64)
        self.assertEqual(rep.overall_status, "pass")
        info = rep.summary["informational"]
        self.assertGreater(info["any_holds"], 0)
        self.assertGreaterEqual(info["witness_exists"], info["any_holds"])
        self.assertIn("converse_fails", info)
        self.assertEqual(rep.summary["cells"], len(rep.grid))


if __name__ == "__main__":
    # import sys;sys.argv = ['', 'Test.testName']
    unittest.main()
