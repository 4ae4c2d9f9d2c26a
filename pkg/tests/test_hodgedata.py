"""
Hodge profile and dimension tests for cyclohodge.hodgedata

Created on 14 Oct 2026

*** NB: must be saved in UTF-8 format ***

@author: semuadmin
"""

# pylint: disable=line-too-long, invalid-name, missing-docstring, no-member

import unittest

from cyclohodge import (
    HodgeInvariantError,
    HodgeProfile,
    InvalidParams,
    NotPrimePower,
    ParameterError,
    build_profile,
    degree_grid,
    dimension_row,
    dimension_set,
    distinct_criterion,
    h_difference_factored,
    is_h_constant,
    multiplicity,
    profile_checks,
    profile_row,
    verify_dimensions,
    verify_profiles,
)


class HodgeDataTest(unittest.TestCase):
    def setUp(self):
        self.maxDiff = None
        self.p57 = build_profile(5, 7)
        self.p45 = build_profile(4, 5)
        self.p58 = build_profile(5, 8)

    def tearDown(self):
        pass

    def testmultiplicity(self):
        self.assertEqual(self.p57.mult, {1: 0, 2: 1, 3: 2, 4: 2, 5: 3, 6: 4})
        self.assertEqual(multiplicity(5, 7, 3), 2)
        self.assertEqual(multiplicity(5, 8, 7), 4)
        with self.assertRaisesRegex(InvalidParams, "is not a canonical unit mod 8"):
            multiplicity(5, 8, 4)

    def testhquad(self):
        self.assertEqual(self.p57.hquad, {1: 16, 2: 4, 3: 0, 4: 0, 5: 4, 6: 16})
        self.assertEqual(self.p45.hquad, {1: 9, 2: 1, 3: 1, 4: 9})
        self.assertEqual(self.p58.hquad, {1: 16, 3: 4, 5: 4, 7: 16})
        self.assertTrue(self.p57.is_even)
        self.assertTrue(self.p57.is_monotone)
        self.assertEqual(self.p57.e_dim, 4)

    def testtablecopies(self):  # getters hand out copies
        mult = self.p57.mult
        mult[1] = 99
        self.assertEqual(self.p57.mult[1], 0)

    def testprofilestr(self):
        self.assertEqual(str(self.p45), "<HodgeProfile(n=4, q=5, H on [1,q/2]_Z=[9, 1])>")
        self.assertEqual(repr(self.p45), "HodgeProfile(4, 5)")

    def testimmutable(self):
        with self.assertRaisesRegex(ParameterError, "Object is immutable"):
            self.p45._n = 6  # pylint: disable=protected-access

    def testinvalid(self):
        with self.assertRaisesRegex(InvalidParams, "p=3 divides n=6"):
            HodgeProfile(6, 9)
        with self.assertRaisesRegex(InvalidParams, "Degree n must be an integer >= 4"):
            HodgeProfile(3, 7)
        with self.assertRaises(InvalidParams):
            HodgeProfile(4.0, 7)
        with self.assertRaises(NotPrimePower):
            HodgeProfile(5, 6)
        with self.assertRaisesRegex(InvalidParams, "p=2 divides n=4"):
            dimension_set(4, 8)

    def testperturbed(self):  # corrupted table fails its self-check
        with self.assertRaises(HodgeInvariantError):
            HodgeProfile(5, 7, perturb=1)
        prof = HodgeProfile(5, 7, check=False, perturb=1)
        checks = profile_checks(prof)
        self.assertFalse(checks["even"])
        self.assertFalse(checks["squares"])
        self.assertTrue(checks["complement"])
        (_, res), = profile_row((5, 7), perturb=True)
        self.assertFalse(res["ok"])

    def testdims(self):
        dims = dimension_set(5, 7)
        self.assertEqual(
            (dims.genus, dims.new_dim, dims.e_dim, dims.half_deg, dims.unitary_dim, dims.ss_lower_bound),
            (12, 12, 4, 3, 48, 45),
        )
        self.assertEqual(dims.isogeny_terms, (12,))
        dims = dimension_set(5, 8)
        self.assertEqual((dims.genus, dims.new_dim), (14, 8))
        self.assertEqual(dims.isogeny_terms, (2, 4, 8))
        dims = dimension_set(4, 9)
        self.assertEqual((dims.genus, dims.new_dim, dims.isogeny_terms), (12, 9, (3, 9)))

    def testdimsq2(self):  # Q has no CM structure
        dims = dimension_set(5, 2)
        self.assertEqual((dims.genus, dims.new_dim, dims.half_deg), (2, 2, 0))
        self.assertEqual((dims.unitary_dim, dims.ss_lower_bound), (0, 0))

    def testdimensionrow(self):
        (cell, res), = dimension_row((5, 7))
        self.assertEqual(cell, (5, 7))
        self.assertTrue(res["ok"])
        self.assertTrue(all(res["checks"].values()))
        self.assertEqual(res["isogeny_terms"], [12])

    def testhconstant(self):
        self.assertEqual(is_h_constant(self.p57), (False, (1, 2)))
        self.assertEqual(is_h_constant(self.p45), (False, (1, 2)))
        self.assertEqual(is_h_constant(build_profile(4, 3)), (True, None))
        self.assertEqual(is_h_constant(build_profile(7, 4)), (True, None))

    def testfactored(self):  # 4(n_a - n_b)(e - n_a - n_b) = H(b) - H(a)
        prof = self.p57
        hq = prof.hquad
        for a in prof.group.units:
            for b in prof.group.units:
                f1, f2 = h_difference_factored(prof, a, b)
                self.assertEqual(4 * f1 * f2, hq[b] - hq[a])
        self.assertEqual(h_difference_factored(prof, 1, 2), (-1, 3))

    def testdistinct(self):
        self.assertTrue(distinct_criterion(self.p57, 1, 2))
        self.assertFalse(distinct_criterion(self.p57, 3, 4))
        self.assertFalse(distinct_criterion(self.p57, 2, 5))
        for prof in (self.p57, self.p45, self.p58, build_profile(10, 13)):
            hq = prof.hquad
            for a in prof.group.units:
                for b in prof.group.units:
                    self.assertEqual(distinct_criterion(prof, a, b), hq[a] != hq[b])

    def testprofilechecks(self):
        EXPECTED_RESULT = {
            "complement": True,
            "even": True,
            "monotone": True,
            "squares": True,
            "non_constant": True,
        }
        self.assertEqual(profile_checks(self.p57), EXPECTED_RESULT)
        self.assertIsNone(profile_checks(build_profile(8, 7))["non_constant"])

    def testdegreegrid(self):
        self.assertEqual(degree_grid(6, 8), [(4, 5), (4, 7), (5, 7), (6, 7), (5, 8)])
        EXPECTED_RESULT = [(5, 2), (4, 3), (5, 3), (5, 4), (4, 5), (6, 5), (4, 7), (5, 7), (6, 7), (5, 8)]
        self.assertEqual(degree_grid(6, 8, include_n_greater_q=True), EXPECTED_RESULT)
        self.assertEqual(degree_grid(3, 100), [])

    def testverifydimensions(self):
        rep = verify_dimensions(6, 8)
        self.assertEqual(rep.grid, [[4, 5], [4, 7], [5, 7], [6, 7], [5, 8]])
        self.assertEqual(rep.overall_status, "pass")

    def testverifyprofiles(self):
        rep = verify_profiles(16, 32)
        self.assertEqual(rep.overall_status, "pass")
        self.assertEqual(rep.summary["failed"], 0)
        rep = verify_profiles(20, 16, include_n_greater_q=True)
        self.assertEqual(rep.overall_status, "pass")

    def testverifyprofilesperturbed(self):  # every perturbed cell is a violation
        rep = verify_profiles(6, 8, perturb=True)
        self.assertEqual(rep.summary["failed"], 5)
        self.assertEqual(rep.overall_status, "fail")


if __name__ == "__main__":
    # import sys;sys.argv = ['', 'Test.testName']
    unittest.main()
