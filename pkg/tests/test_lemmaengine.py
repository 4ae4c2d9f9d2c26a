"""
Lemma engine tests for cyclohodge.lemmaengine: closure, certificates,
threshold oracle, step classification and separation

Created on 14 Oct 2026

*** NB: must be saved in UTF-8 format ***

@author: semuadmin
"""

# pylint: disable=line-too-long, invalid-name, missing-docstring, no-member

import unittest

from cyclohodge import (
    BadPair,
    LemmaCertificate,
    MergeEvent,
    ParameterError,
    Partition,
    PreconditionViolated,
    b_max,
    build_profile,
    certificate_row,
    check_counterexample,
    classify_step,
    collapse_closure,
    decide_even_lemma,
    half_range,
    invariance_set,
    is_theta_invariant,
    lemma_rows,
    make_group,
    prime_powers,
    replay_certificate,
    separation_summary,
    separation_witness,
    step_row,
    threshold_oracle,
    verify_lemma_exhaustive,
    verify_oracle_equivalence,
    verify_separation,
    verify_step_structure,
)
from cyclohodge.hodgetypes_core import (
    CONSTANT_FORCED,
    NONDECREASING,
    NOT_FORCED,
    STEP_EVEN_OR_3A,
    STEP_P2,
    STEP_P3,
    STEP_P5,
    STEP_SEVEN_A,
    STEP_SMALL_A,
    STEP_TRIVIAL,
)


class LemmaEngineTest(unittest.TestCase):
    def setUp(self):
        self.maxDiff = None
        self.p45 = build_profile(4, 5)
        self.p57 = build_profile(5, 7)
        self.p58 = build_profile(5, 8)

    def tearDown(self):
        pass

    def testinvariance(self):
        self.assertFalse(is_theta_invariant(self.p58, 3))
        self.assertTrue(is_theta_invariant(self.p58, 1))
        self.assertTrue(is_theta_invariant(self.p58, 7))
        self.assertTrue(is_theta_invariant({1: 5, 2: 5, 3: 5}, 3, 7))
        self.assertTrue(is_theta_invariant({1: 2, 2: 1, 3: 1, 4: 2}, 4, 5))
        self.assertFalse(is_theta_invariant({1: 2, 2: 1, 3: 1, 4: 2}, 2, 5))

    def testinvarianceerrors(self):
        with self.assertRaisesRegex(ParameterError, "Modulus q is required"):
            is_theta_invariant({1: 1}, 1)
        with self.assertRaisesRegex(ParameterError, "Table is defined neither"):
            is_theta_invariant({1: 1, 5: 1}, 1, 7)
        with self.assertRaisesRegex(ParameterError, "is not a canonical unit"):
            is_theta_invariant(self.p57, 7)

    def testinvarianceset(self):
        self.assertEqual(invariance_set({1: 5, 2: 5, 3: 5}, 7), (1, 2, 3, 4, 5, 6))
        self.assertEqual(invariance_set(self.p45), (1, 4))
        self.assertEqual(invariance_set(self.p58), (1, 7))
        self.assertEqual(invariance_set(self.p57), (1, 6))

    def testclosure8(self):
        part = collapse_closure(8, 3)
        self.assertEqual(part.classes, ((1, 3),))
        self.assertEqual(part.merge_log, (MergeEvent("orbit", 1, 3, (1, 3)),))
        self.assertEqual(len(part), 1)

    def testclosure7(self):  # a = -1 gives only trivial folds
        part = collapse_closure(7, 6)
        self.assertEqual(part.classes, ((1,), (2,), (3,)))
        self.assertEqual(part.merge_log, ())
        self.assertEqual(part.block_of(2), 1)
        with self.assertRaisesRegex(ParameterError, "is not in the domain"):
            part.block_of(4)

    def testclosure25(self):
        part = collapse_closure(25, 7)
        self.assertEqual(part.classes, ((1, 2, 3, 4, 6, 7, 8, 9, 11, 12),))
        causes = {ev.cause for ev in part.merge_log}
        self.assertEqual(causes, {"orbit", "interval"})
        self.assertEqual(len(part.merge_log), 9)  # 10 singletons down to 1 block
        self.assertEqual(part.merge_log[0], MergeEvent("orbit", 1, 7, (1, 7)))

    def testclosuredeterministic(self):
        self.assertEqual(collapse_closure(49, 18).merge_log, collapse_closure(49, 18).merge_log)

    def testpartitioninvalid(self):
        with self.assertRaisesRegex(ParameterError, "do not partition the domain"):
            Partition(half_range(make_group(7)), [[1, 2]], [])
        with self.assertRaisesRegex(ParameterError, "do not partition the domain"):
            Partition(half_range(make_group(7)), [[1, 2], [2, 3]], [])

    def testdecide8(self):
        cert = decide_even_lemma(8, 3)
        self.assertEqual(cert.verdict, CONSTANT_FORCED)
        self.assertEqual(cert.b_max, 3)
        self.assertEqual(cert.step_tag, STEP_P2)
        self.assertIsNone(cert.counterexample)
        self.assertTrue(cert.forced)

    def testdecide7(self):
        cert = decide_even_lemma(7, 6)
        self.assertEqual(cert.verdict, NOT_FORCED)
        self.assertEqual(cert.counterexample, {1: 3, 2: 2, 3: 1})
        self.assertIsNone(cert.step_tag)
        EXPECTED_RESULT = {"even": True, "monotone": True, "invariant": True, "non_constant": True}
        self.assertEqual(check_counterexample(7, 6, cert.counterexample), EXPECTED_RESULT)
        cert = decide_even_lemma(7, 1)
        self.assertEqual(cert.verdict, NOT_FORCED)
        self.assertIsNone(cert.step_tag)

    def testdecide25(self):
        cert = decide_even_lemma(25, 7)
        self.assertEqual(cert.verdict, CONSTANT_FORCED)
        self.assertEqual(cert.step_tag, STEP_P5)

    def testdecidestepnone(self):  # step tag only when a = b_max(a) and a != 1
        cert = decide_even_lemma(7, 2)  # b_max = 3
        self.assertEqual(cert.verdict, CONSTANT_FORCED)
        self.assertEqual(cert.b_max, 3)
        self.assertIsNone(cert.step_tag)
        self.assertEqual(decide_even_lemma(7, 3).step_tag, STEP_EVEN_OR_3A)

    def testdecidesmalldomain(self):  # one-element domain is trivially constant
        for q, a in ((2, 1), (3, 2), (4, 3)):
            self.assertEqual(decide_even_lemma(q, a).verdict, CONSTANT_FORCED)
            self.assertTrue(threshold_oracle(q, a))

    def testdirection(self):
        cert = decide_even_lemma(7, 6, NONDECREASING)
        self.assertEqual(cert.counterexample, {1: -3, 2: -2, 3: -1})
        self.assertTrue(all(check_counterexample(7, 6, cert.counterexample, NONDECREASING).values()))
        self.assertFalse(check_counterexample(7, 6, cert.counterexample)["monotone"])
        self.assertTrue(replay_certificate(cert))
        with self.assertRaisesRegex(ParameterError, "Invalid direction"):
            decide_even_lemma(7, 6, 0)

    def testcertificateimmutable(self):
        cert = decide_even_lemma(8, 3)
        with self.assertRaisesRegex(ParameterError, "Object is immutable"):
            cert.verdict = NOT_FORCED
        with self.assertRaisesRegex(ParameterError, "Object is immutable"):
            cert.trace.classes = ()

    def testcertificatedict(self):
        res = decide_even_lemma(8, 3).to_dict()
        self.assertEqual(res["classes"], [[1, 3]])
        self.assertEqual(res["merge_log"], [["orbit", 1, 3, [1, 3]]])
        self.assertEqual(res["verdict"], CONSTANT_FORCED)
        self.assertEqual(repr(decide_even_lemma(8, 3)), "<LemmaCertificate(q=8, a=3, b_max=3, verdict=ConstantForced, step_tag=P2)>")

    def testclassify(self):
        self.assertEqual(classify_step(16, 7), STEP_P2)
        self.assertEqual(7, 2 ** (4 - 1) - 1)
        self.assertEqual(classify_step(25, 7), STEP_P5)
        self.assertEqual(classify_step(9, 4), STEP_P3)
        self.assertEqual(classify_step(7, 1), STEP_TRIVIAL)
        self.assertEqual(classify_step(7, 3), STEP_EVEN_OR_3A)
        self.assertEqual(b_max(make_group(49), 18), 19)
        self.assertEqual(classify_step(49, 19), STEP_EVEN_OR_3A)
        self.assertEqual(classify_step(41, 9), STEP_SEVEN_A)  # 9^2 = -1 mod 41
        self.assertEqual(classify_step(113, 15), STEP_SMALL_A)  # 15^2 = -1 mod 113

    def testclassifyprecondition(self):
        with self.assertRaisesRegex(PreconditionViolated, "a=2 is not b_max=3"):
            classify_step(7, 2)
        with self.assertRaises(PreconditionViolated):
            classify_step(25, 18)

    def testclassifytotal(self):  # defined on every a = b_max(a)
        for q in prime_powers(128):
            g = make_group(q)
            for a in g.half:
                if b_max(g, a) == a:
                    self.assertIsNotNone(classify_step(q, a))

    def testoracle(self):
        self.assertTrue(threshold_oracle(8, 3))
        self.assertFalse(threshold_oracle(7, 6))
        self.assertTrue(threshold_oracle(25, 7))
        self.assertFalse(threshold_oracle(7, 1))
        self.assertTrue(threshold_oracle(49, 18))

    def testreplay(self):
        for q, a in ((8, 3), (7, 6), (25, 7), (49, 18), (64, 31), (81, 28)):
            self.assertTrue(replay_certificate(decide_even_lemma(q, a)))

    def testreplaytampered(self):  # unjustified merges are rejected
        dom = half_range(make_group(8))
        part = Partition(dom, [[1, 3]], [MergeEvent("orbit", 1, 3, (1, 3))])
        self.assertTrue(replay_certificate(LemmaCertificate(8, 3, part)))
        self.assertFalse(replay_certificate(LemmaCertificate(8, 7, part)))
        part = Partition(dom, [[1, 3]], [MergeEvent("interval", 1, 3, (1, 3))])
        self.assertFalse(replay_certificate(LemmaCertificate(8, 3, part)))
        part = Partition(dom, [[1, 3]], [MergeEvent("magic", 1, 3, (1, 3))])
        self.assertFalse(replay_certificate(LemmaCertificate(8, 3, part)))
        part = Partition(dom, [[1, 3]], [])
        self.assertFalse(replay_certificate(LemmaCertificate(8, 3, part)))
        dom = half_range(make_group(7))
        part = Partition(dom, [[1], [2, 3]], [MergeEvent("orbit", 2, 2, (2, 3))])
        self.assertFalse(replay_certificate(LemmaCertificate(7, 6, part)))

    def testseparationwitness(self):
        self.assertEqual(separation_witness(self.p45, 2, 1), 1)
        self.assertEqual(separation_witness(self.p58, 3, 1), 1)
        self.assertEqual(separation_witness(self.p57, 2, 3), 1)
        self.assertEqual(separation_witness(build_profile(4, 13), 1, 2), 2)

    def testseparationbadpair(self):
        with self.assertRaisesRegex(BadPair, "\\(2, 5\\) is not a good pair mod 7"):
            separation_witness(self.p57, 2, 5)
        with self.assertRaises(BadPair):
            separation_witness(self.p57, 2, 2)

    def testseparationsummary(self):
        self.assertEqual(separation_summary(self.p45), {2: 1, 3: 1})

    def testverifyseparation(self):
        rep = verify_separation(self.p45)
        self.assertEqual(rep.grid, [[4, 5, 2], [4, 5, 3]])
        self.assertEqual(rep.summary["informational"], {"good_pairs": 8, "separated": 8})
        self.assertEqual(rep.results[0]["witness"], [2, 1])
        self.assertEqual(rep.overall_status, "pass")
        self.assertEqual(verify_separation(self.p58).overall_status, "pass")
        rep = verify_separation(build_profile(5, 2))  # no good pairs
        self.assertEqual(rep.summary["cells"], 0)
        self.assertEqual(rep.overall_status, "pass")

    def testseparationbrute(self):  # ratio reduction agrees with pair-by-pair search
        for n, q in ((4, 5), (5, 8), (4, 13), (6, 11), (7, 16)):
            prof = build_profile(n, q)
            ratios = separation_summary(prof)
            for a in prof.group.units:
                for b in prof.group.units:
                    if a in (b, q - b):
                        continue
                    found = separation_witness(prof, a, b) is not None
                    self.assertEqual(found, ratios[a * pow(b, -1, q) % q] is not None)

    def testlemmarows(self):
        (cell, res), = lemma_rows(8)
        self.assertEqual(cell, (8, 3))
        self.assertEqual(
            (res["units"], res["subgroup_order"], res["b_max"], res["verdict"], res["step_tag"]),
            (2, 4, 3, CONSTANT_FORCED, STEP_P2),
        )
        self.assertTrue(res["oracle"] and res["replay"] and res["ok"])
        self.assertEqual(lemma_rows(4), [])

    def testcertificaterow(self):
        (cell, res), = certificate_row(7, 6)
        self.assertEqual(cell, (7, 6))
        self.assertEqual(res["verdict"], NOT_FORCED)
        self.assertTrue(res["ok"])  # a = -1 is outside the lemma
        (_, res), = certificate_row(25, 7)
        self.assertTrue(res["ok"])
        self.assertEqual(res["step_tag"], STEP_P5)

    def testexhaustive(self):
        rep = verify_lemma_exhaustive(64)
        self.assertEqual(rep.overall_status, "pass")
        tags = rep.summary["step_tags"]
        total = sum(make_group(q).phi - 2 for q in prime_powers(64) if q >= 3)
        self.assertEqual(sum(tags.values()), total)
        self.assertEqual(sum(r["units"] for r in rep.results), total)
        self.assertEqual(set(tags) - {STEP_P2, STEP_P3, STEP_P5, STEP_EVEN_OR_3A, STEP_SEVEN_A, STEP_SMALL_A}, set())

    def testexhaustivevacuous(self):
        rep = verify_lemma_exhaustive(4)
        self.assertEqual(rep.summary["cells"], 0)
        self.assertEqual(rep.overall_status, "pass")
        with self.assertRaisesRegex(ParameterError, "q_max must be >= 2"):
            verify_lemma_exhaustive(1)

    def testexhaustiveparallel(self):
        rep1 = verify_lemma_exhaustive(32)
        rep2 = verify_lemma_exhaustive(32, jobs=2)
        self.assertEqual(rep1.serialize(False), rep2.serialize(False))

    def testoracleequivalence(self):
        rep = verify_oracle_equivalence(64)
        self.assertEqual(rep.overall_status, "pass")
        self.assertEqual(rep.summary["cells"], sum(make_group(q).phi for q in prime_powers(64)))

    def teststeps(self):
        rep = verify_step_structure(128)
        self.assertEqual(rep.overall_status, "pass")
        (q, res), = step_row(25)
        self.assertEqual(q, 25)
        self.assertEqual((res["classes"], res["min_margin"]), (3, 73))
        self.assertTrue(res["checks"]["b_max_25"])
        self.assertTrue(res["checks"]["p5_subgroup"])
        (_, res), = step_row(16)
        self.assertTrue(res["checks"]["p2_b_max"])
        self.assertTrue(res["checks"]["involutions"])
        (_, res), = step_row(27)
        self.assertTrue(res["checks"]["order3"])
        (_, res), = step_row(2)
        self.assertIsNone(res["min_margin"])
        self.assertTrue(res["ok"])


if __name__ == "__main__":
    # import sys;sys.argv = ['', 'Test.testName']
    unittest.main()
