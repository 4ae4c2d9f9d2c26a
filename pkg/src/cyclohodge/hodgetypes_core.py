"""
cyclohodge core globals and constants

Created on 14 Oct 2026

:author: semuadmin
:copyright: SEMU Consulting © 2026
:license: BSD 3-Clause
"""

DEFAULT_MAX_Q = 2**31
"""Default safety cap on the modulus q"""
MAX_Q_ENV = "CYCLO_HODGE_MAX_Q"
"""Environment variable overriding the safety cap"""
CM_ENUM_LIMIT = 20
"""Largest phi(q)/2 for which CM types are materialised"""
MIN_DEGREE = 4
"""Smallest admissible degree n of f(x)"""

ERR_RAISE = 2
"""Raise error and quit"""
ERR_LOG = 1
"""Log errors"""
ERR_IGNORE = 0
"""Ignore errors"""

EXIT_PASS = 0
"""All requested checks passed (or informational query)"""
EXIT_VIOLATION = 1
"""At least one mathematical violation recorded"""
EXIT_USAGE = 2
"""Usage or input error"""

NONINCREASING = 1
"""Monotone direction of h on [1,q/2]_Z (the Hodge case)"""
NONDECREASING = -1
"""Opposite monotone direction"""

CONSTANT_FORCED = "ConstantForced"
"""Every even monotone theta_a-invariant function is constant"""
NOT_FORCED = "NotForced"
"""A non-constant even monotone theta_a-invariant function exists"""

MERGE_ORBIT = "orbit"
"""Merge caused by h(x) = h(fold(a.x))"""
MERGE_INTERVAL = "interval"
"""Merge caused by monotone collapse of [x,y]_Z"""

STEP_TRIVIAL = "TrivialPM1"
"""a = 1, i.e. <+-a> = {+-1}"""
STEP_P2 = "P2"
"""p = 2"""
STEP_EVEN_OR_3A = "EvenOr3a"
"""p odd, a even or 3a >= q"""
STEP_P3 = "P3"
"""p = 3"""
STEP_SEVEN_A = "SevenA"
"""p odd, p != 3, a odd, 3a < q <= 7a"""
STEP_SMALL_A = "SmallA"
"""p not in {2,3,5}, a odd, 7a < q"""
STEP_P5 = "P5"
"""p = 5"""

STEP_TAGS = {
    STEP_TRIVIAL: "<+-a> = {+-1}",
    STEP_P2: "p = 2, b_max = 2^(r-1) - 1",
    STEP_EVEN_OR_3A: "a even, or a odd and 3a >= q",
    STEP_P3: "p = 3, unique subgroup of order 3",
    STEP_SEVEN_A: "a odd, 3a < q and 7a >= q",
    STEP_SMALL_A: "p not in {3,5}, a odd and 7a < q",
    STEP_P5: "p = 5",
}
"""Step tags with a short description of the case they cover"""

STATUS_PASS = "pass"
"""Report overall status, no violations"""
STATUS_FAIL = "fail"
"""Report overall status, one or more violations"""

CMD_DIMS = "dims"
CMD_CHECK = "check"
CMD_VERIFY_LEMMA = "verify-lemma"
CMD_SCAN = "scan"
CMD_ORBITS = "orbits"
CMD_PROFILES = "profiles"
CMD_STEPS = "steps"
CMD_ORACLE = "oracle"
CMD_SEPARATION = "separation"

CSV_HEADERS = {
    CMD_DIMS: [
        "n",
        "q",
        "genus",
        "new_dim",
        "e_dim",
        "half_deg",
        "unitary_dim",
        "ss_lower_bound",
    ],
    CMD_CHECK: [
        "n",
        "q",
        "p",
        "holds_A",
        "holds_B",
        "holds_C",
        "any_holds",
        "witness",
        "ok",
    ],
    CMD_VERIFY_LEMMA: [
        "q",
        "a",
        "units",
        "b_max",
        "verdict",
        "oracle",
        "step_tag",
        "ok",
    ],
    CMD_SCAN: [
        "n",
        "q",
        "h_constant",
        "any_holds",
        "witness",
        "good_pairs",
        "separated",
        "orbits",
        "orbits_witnessed",
        "ok",
    ],
    CMD_ORBITS: [
        "n",
        "q",
        "orbit_a",
        "orbit_b",
        "size",
        "witness_a",
        "witness_b",
        "ok",
    ],
    CMD_PROFILES: [
        "n",
        "q",
        "complement",
        "even",
        "monotone",
        "squares",
        "non_constant",
        "dimensions",
        "ok",
    ],
    CMD_STEPS: [
        "q",
        "p",
        "r",
        "classes",
        "min_margin",
        "ok",
    ],
    CMD_ORACLE: [
        "q",
        "a",
        "units",
        "verdict",
        "oracle",
        "ok",
    ],
    CMD_SEPARATION: [
        "n",
        "q",
        "ratio",
        "pairs",
        "witness",
        "separated",
        "ok",
    ],
}
"""CSV column headers per subcommand"""
