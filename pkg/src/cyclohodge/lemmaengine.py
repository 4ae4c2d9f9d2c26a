"""
Decision procedure for the even-function lemma:

    if h is even, monotone on [1,q/2]_Z and h(a.x) = h(x) for some
    unit a != +-1, then h is constant.

collapse_closure() computes the finest partition of [1,q/2]_Z compatible
with the two inference rules available for such h:

- orbit: h(x) = h(fold(a.x))
- interval: if h(x) = h(y) and x < z < y then h(z) = h(x) (monotonicity)

One block means every admissible h is constant (ConstantForced); otherwise
a non-constant step function on the blocks is an explicit counterexample
(NotForced). threshold_oracle() decides the same question independently
from 0/1 level-set functions.

Created on 14 Oct 2026

:author: semuadmin
:copyright: SEMU Consulting © 2026
:license: BSD 3-Clause
"""

from dataclasses import dataclass
from logging import getLogger

from cyclohodge.exceptions import BadPair, ParameterError, PreconditionViolated
from cyclohodge.hodgedata import HodgeProfile, is_h_constant
from cyclohodge.hodgehelpers import even_extension, is_constant, is_monotone
from cyclohodge.hodgereport import VerificationReport
from cyclohodge.hodgescanner import scan
from cyclohodge.hodgetypes_core import (
    CMD_ORACLE,
    CMD_SEPARATION,
    CMD_STEPS,
    CMD_VERIFY_LEMMA,
    CONSTANT_FORCED,
    MERGE_INTERVAL,
    MERGE_ORBIT,
    NONDECREASING,
    NONINCREASING,
    NOT_FORCED,
    STEP_EVEN_OR_3A,
    STEP_P2,
    STEP_P3,
    STEP_P5,
    STEP_SEVEN_A,
    STEP_SMALL_A,
    STEP_TRIVIAL,
)
from cyclohodge.unitgroup import (
    HalfRange,
    UnitGroup,
    b_max,
    check_unit,
    elements_of_order,
    fold,
    half_range,
    make_group,
    order_two_elements,
    pm_classes,
    prime_powers,
)

logger = getLogger(__name__)


class _DisjointSet:
    """
    Union-find over positions 0 .. count-1 (union by rank, path halving).
    """

    def __init__(self, count: int):
        self.parent = list(range(count))
        self.rank = [0] * count
        self.groups = count

    def find(self, element: int) -> int:
        parent = self.parent
        while parent[element] != element:
            parent[element] = parent[parent[element]]
            element = parent[element]
        return element

    def union(self, first: int, second: int) -> bool:
        """
        Unite the sets containing first and second.

        :return: False if they were already in the same set
        :rtype: bool
        """

        rep1 = self.find(first)
        rep2 = self.find(second)
        if rep1 == rep2:
            return False
        if self.rank[rep1] < self.rank[rep2]:
            rep1, rep2 = rep2, rep1
        self.parent[rep2] = rep1
        if self.rank[rep1] == self.rank[rep2]:
            self.rank[rep1] += 1
        self.groups -= 1
        return True

    def __len__(self) -> int:
        return self.groups

    def to_list(self) -> list:
        """
        Blocks as lists of positions, ordered by smallest position.
        """

        blocks = {}
        for i in range(len(self.parent)):
            blocks.setdefault(self.find(i), []).append(i)
        return sorted(blocks.values(), key=lambda b: b[0])


@dataclass(frozen=True)
class MergeEvent:
    """
    One successful merge in a closure trace.

    For an orbit event (x, y) = (x, fold(a.x)) and joined = (x, y).
    For an interval event x < y already lie in one block and joined is
    the pair of neighbouring domain elements in [x, y] that got merged.
    """

    cause: str
    x: int
    y: int
    joined: tuple

    def to_list(self) -> list:
        return [self.cause, self.x, self.y, list(self.joined)]


class _Frozen:
    """
    Mixin: attribute assignment is refused once _immutable is set.
    """

    def __setattr__(self, name, value):
        if getattr(self, "_immutable", False):
            raise ParameterError(
                f"Object is immutable. Updates to {name} not permitted after initialisation."
            )
        super().__setattr__(name, value)


class Partition(_Frozen):
    """
    Partition class.
    """

    def __init__(self, domain: HalfRange, classes, merge_log):
        """Constructor.

        :param HalfRange domain: [1,q/2]_Z
        :param classes: iterable of blocks (iterables of domain elements)
        :param merge_log: iterable of MergeEvent in the order applied
        :raises: ParameterError if the blocks do not partition the domain
        """

        self._immutable = False
        self.domain = domain
        self.classes = tuple(
            sorted((tuple(sorted(b)) for b in classes), key=lambda b: b[0])
        )
        self.merge_log = tuple(merge_log)
        covered = [x for b in self.classes for x in b]
        if sorted(covered) != list(domain.members):
            raise ParameterError("Blocks do not partition the domain exactly")
        self._immutable = True

    def block_of(self, x: int) -> int:
        """
        Index of the block containing x.

        :param int x: domain element
        :return: block index (blocks ordered by minimum)
        :rtype: int
        :raises: ParameterError if x is not in the domain
        """

        for i, block in enumerate(self.classes):
            if x in block:
                return i
        raise ParameterError(f"{x} is not in the domain [{self.domain.lo},{self.domain.hi}]_Z")

    def __len__(self) -> int:
        return len(self.classes)

    def __repr__(self) -> str:
        blocks = ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.classes)
        return f"<Partition([{blocks}], merges={len(self.merge_log)})>"


class LemmaCertificate(_Frozen):
    """
    LemmaCertificate class.
    """

    def __init__(
        self,
        q: int,
        a: int,
        trace: Partition,
        direction: int = NONINCREASING,
    ):
        """Constructor.

        The verdict, b_max, counterexample and step tag are all derived
        from the closure trace.

        :param int q: prime power
        :param int a: unit
        :param Partition trace: final closure state with merge log
        :param int direction: NONINCREASING (1) or NONDECREASING (-1)
        """

        self._immutable = False
        g = make_group(q)
        self.q = q
        self.a = a
        self.trace = trace
        self.direction = direction
        self.b_max = b_max(g, a)
        nblocks = len(trace)
        if nblocks == 1:
            self.verdict = CONSTANT_FORCED
            self.counterexample = None
        else:
            self.verdict = NOT_FORCED
            self.counterexample = {
                x: direction * (nblocks - rank)
                for rank, block in enumerate(trace.classes)
                for x in block
            }
        self.step_tag = None
        if a == self.b_max and a != 1:
            self.step_tag = classify_step(q, a)
        self._immutable = True

    @property
    def forced(self) -> bool:
        """
        Getter for verdict as a flag.

        :return: True if ConstantForced
        :rtype: bool
        """

        return self.verdict == CONSTANT_FORCED

    def to_dict(self) -> dict:
        """
        Certificate as JSON-native values, with the full merge log.

        :return: dict
        :rtype: dict
        """

        return {
            "q": self.q,
            "a": self.a,
            "b_max": self.b_max,
            "verdict": self.verdict,
            "direction": self.direction,
            "step_tag": self.step_tag,
            "classes": [list(b) for b in self.trace.classes],
            "merge_log": [ev.to_list() for ev in self.trace.merge_log],
            "counterexample": self.counterexample,
        }

    def __repr__(self) -> str:
        return (
            f"<LemmaCertificate(q={self.q}, a={self.a}, b_max={self.b_max}, "
            f"verdict={self.verdict}, step_tag={self.step_tag})>"
        )


def _full_table(h, q: int = None) -> tuple:
    """
    Resolve h (profile, half-domain table or full table) to
    (group, table on all units).
    """

    if isinstance(h, HodgeProfile):
        return h.group, h.hquad
    if q is None:
        raise ParameterError("Modulus q is required for a bare function table")
    g = make_group(q)
    keys = set(h)
    if keys == set(g.units):
        return g, dict(h)
    if keys == set(g.half):
        return g, even_extension(q, h, g.units)
    raise ParameterError(f"Table is defined neither on [1,{q}/2]_Z nor on all units mod {q}")


def is_theta_invariant(h, a: int, q: int = None) -> bool:
    """
    Check h(a.x) = h(x) for every unit x.

    :param h: HodgeProfile, or table on [1,q/2]_Z (extended evenly), or table on all units
    :param int a: unit
    :param int q: modulus, required unless h is a HodgeProfile (None)
    :return: True/False
    :rtype: bool
    :raises: ParameterError
    """

    g, table = _full_table(h, q)
    check_unit(g, a)
    return all(table[a * x % g.q] == val for x, val in table.items())


def invariance_set(h, q: int = None) -> tuple:
    """
    Units a under which h is invariant.

    :param h: as for is_theta_invariant
    :param int q: modulus (None)
    :return: ascending tuple of units (a subgroup)
    :rtype: tuple
    """

    g, table = _full_table(h, q)
    return tuple(
        a for a in g.units if all(table[a * x % g.q] == v for x, v in table.items())
    )


def collapse_closure(q: int, a: int) -> Partition:
    """
    Fixpoint of the orbit and interval rules on [1,q/2]_Z.

    Each round applies every orbit merge (x, fold(a.x)) for ascending x,
    then every interval merge, sweeping each block's [min, max] span in
    order of the span's lower end. Rounds repeat until nothing merges.

    :param int q: prime power
    :param int a: unit
    :return: Partition with merge log
    :rtype: Partition
    :raises: ParameterError
    """

    g = make_group(q)
    check_unit(g, a)
    domain = half_range(g)
    members = domain.members
    index = {x: i for i, x in enumerate(members)}
    dset = _DisjointSet(len(members))
    log = []
    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        for x in members:
            y = fold(g, a * x)
            if dset.union(index[x], index[y]):
                log.append(MergeEvent(MERGE_ORBIT, x, y, (x, y)))
                changed = True
        spans = {}
        for i in range(len(members)):
            root = dset.find(i)
            lo, hi = spans.get(root, (i, i))
            spans[root] = (min(lo, i), max(hi, i))
        for lo, hi in sorted(spans.values()):
            for i in range(lo, hi):
                if dset.union(i, i + 1):
                    log.append(
                        MergeEvent(
                            MERGE_INTERVAL,
                            members[lo],
                            members[hi],
                            (members[i], members[i + 1]),
                        )
                    )
                    changed = True
    logger.debug(
        "Closure q=%d a=%d: %d block(s) after %d round(s), %d merge(s)",
        q,
        a,
        len(dset),
        rounds,
        len(log),
    )
    blocks = [[members[i] for i in b] for b in dset.to_list()]
    return Partition(domain, blocks, log)


def decide_even_lemma(q: int, a: int, direction: int = NONINCREASING) -> LemmaCertificate:
    """
    Decide whether every even, monotone, theta_a-invariant function on
    the units mod q is constant.

    :param int q: prime power
    :param int a: unit
    :param int direction: NONINCREASING (1) or NONDECREASING (-1)
    :return: LemmaCertificate
    :rtype: LemmaCertificate
    :raises: ParameterError
    """

    if direction not in (NONINCREASING, NONDECREASING):
        raise ParameterError(f"Invalid direction {direction!r}")
    return LemmaCertificate(q, a, collapse_closure(q, a), direction)


def classify_step(q: int, a: int) -> str:
    """
    First applicable proof case for a = b_max(a), in the order
    TrivialPM1, P2, P3, P5, EvenOr3a, SevenA, SmallA.

    :param int q: prime power
    :param int a: unit with a = b_max(a)
    :return: step tag
    :rtype: str
    :raises: PreconditionViolated if a != b_max(a)
    """

    g = make_group(q)
    check_unit(g, a)
    bm = b_max(g, a)
    if a != bm:
        raise PreconditionViolated(f"a={a} is not b_max={bm} of its subgroup mod {q}")
    if a == 1:
        return STEP_TRIVIAL
    if g.p == 2:
        return STEP_P2
    if g.p == 3:
        return STEP_P3
    if g.p == 5:
        return STEP_P5
    if a % 2 == 0 or 3 * a >= q:
        return STEP_EVEN_OR_3A
    if 7 * a >= q:
        return STEP_SEVEN_A
    return STEP_SMALL_A


def threshold_oracle(q: int, a: int) -> bool:
    """
    Independent decision: True iff no threshold t < max [1,q/2]_Z makes
    the even extension of 1_{x <= t} invariant under theta_a.

    Any non-constant monotone invariant h has such a level set, so this
    agrees with decide_even_lemma.

    :param int q: prime power
    :param int a: unit
    :return: True if the lemma holds for (q, a)
    :rtype: bool
    """

    g = make_group(q)
    check_unit(g, a)
    pairs = [(x, fold(g, a * x)) for x in g.half]
    for t in g.half[:-1]:
        if all((x <= t) == (y <= t) for x, y in pairs):
            return False
    return True


def check_counterexample(
    q: int, a: int, table: dict, direction: int = NONINCREASING
) -> dict:
    """
    Independently re-check the four counterexample properties.

    :param int q: prime power
    :param int a: unit
    :param dict table: values on [1,q/2]_Z or on all units
    :param int direction: NONINCREASING (1) or NONDECREASING (-1)
    :return: dict of even, monotone, invariant, non_constant flags
    :rtype: dict
    """

    g, full = _full_table(table, q)
    return {
        "even": all(full[u] == full[q - u] for u in g.units),
        "monotone": is_monotone((full[x] for x in g.half), direction),
        "invariant": is_theta_invariant(full, a, q),
        "non_constant": not is_constant(full.values()),
    }


def replay_certificate(cert: LemmaCertificate) -> bool:
    """
    Replay a certificate's merge log from singletons, re-justifying
    every merge, and confirm the final blocks and verdict.

    :param LemmaCertificate cert: certificate
    :return: True if the certificate is sound
    :rtype: bool
    """

    g = make_group(cert.q)
    members = g.half
    index = {x: i for i, x in enumerate(members)}
    dset = _DisjointSet(len(members))
    for ev in cert.trace.merge_log:
        if ev.cause == MERGE_ORBIT:
            if fold(g, cert.a * ev.x) != ev.y or tuple(ev.joined) != (ev.x, ev.y):
                return False
        elif ev.cause == MERGE_INTERVAL:
            if dset.find(index[ev.x]) != dset.find(index[ev.y]):
                return False
            if not all(ev.x <= u <= ev.y for u in ev.joined):
                return False
        else:
            return False
        u, v = ev.joined
        if u not in index or v not in index or not dset.union(index[u], index[v]):
            return False
    blocks = tuple(tuple(members[i] for i in b) for b in dset.to_list())
    if blocks != cert.trace.classes:
        return False
    if cert.forced:
        return len(blocks) == 1 and cert.counterexample is None
    flags = check_counterexample(cert.q, cert.a, cert.counterexample, cert.direction)
    return len(blocks) > 1 and all(flags.values())


def separation_witness(profile: HodgeProfile, a: int, b: int):
    """
    Smallest unit x with H(x.a) != H(x.b).

    :param HodgeProfile profile: profile
    :param int a: unit
    :param int b: unit, with a != b and a != q - b
    :return: x, or None if no translate separates a and b
    :rtype: int or None
    :raises: BadPair
    """

    g, hquad = profile.group, profile.hquad
    check_unit(g, a)
    check_unit(g, b)
    if a == b or a == g.q - b:
        raise BadPair(f"({a}, {b}) is not a good pair mod {g.q}")
    for x in g.units:
        if hquad[x * a % g.q] != hquad[x * b % g.q]:
            return x
    return None


def separation_summary(profile: HodgeProfile) -> dict:
    """
    Separation of every good pair, reduced to the ratio c = a.b^-1.

    (a, b) is separated by x iff c is separated from 1 by y = x.b, so
    each ratio c not in {1, q-1} settles all phi(q) pairs (c.b, b).

    :param HodgeProfile profile: profile
    :return: dict of {c: smallest y with H(c.y) != H(y), or None}
    :rtype: dict
    """

    g, hquad = profile.group, profile.hquad
    found = {}
    for c in g.units:
        if c in (1, g.minus_one):
            continue
        found[c] = next((y for y in g.units if hquad[c * y % g.q] != hquad[y]), None)
    return found


def verify_separation(profile: HodgeProfile) -> VerificationReport:
    """
    Check that every good pair is separated by some translate, one row
    per ratio class. A failure is a violation only when h is not constant.

    :param HodgeProfile profile: profile
    :return: VerificationReport
    :rtype: VerificationReport
    """

    g = profile.group
    n, q = profile.n, profile.q
    h_const = is_h_constant(profile)[0]
    report = VerificationReport(CMD_SEPARATION, {"n": n, "q": q})
    for c, y in separation_summary(profile).items():
        separated = y is not None
        # pair (c.y, y) is separated at x = 1
        witness = [c * y % q, y] if separated else None
        report.add(
            (n, q, c),
            {
                "n": n,
                "q": q,
                "ratio": c,
                "pairs": g.phi,
                "witness": witness,
                "separated": separated,
                "ok": separated or h_const,
            },
        )
        report.note("good_pairs", g.phi)
        report.note("separated", g.phi if separated else 0)
    return report


def lemma_rows(q: int) -> list:
    """
    Report rows for every <+-a> != {+-1} mod q, one per subgroup, with
    the smallest generating unit as representative.

    :param int q: prime power
    :return: list of ((q, a), result)
    :rtype: list
    """

    g = make_group(q)
    rows = []
    for key, units in pm_classes(g).items():
        if len(key) <= 2:  # {+-1}
            continue
        rep = units[0]
        cert = decide_even_lemma(q, rep)
        oracle = threshold_oracle(q, rep)
        bm = b_max(g, rep)
        try:
            tag = classify_step(q, bm)
        except PreconditionViolated:
            tag = None
        replay = replay_certificate(cert)
        result = {
            "q": q,
            "a": rep,
            "units": len(units),
            "subgroup_order": len(key),
            "b_max": bm,
            "verdict": cert.verdict,
            "oracle": oracle,
            "step_tag": tag,
            "replay": replay,
        }
        if not cert.forced:
            result["counterexample"] = cert.counterexample
            result["merge_log"] = [ev.to_list() for ev in cert.trace.merge_log]
        result["ok"] = cert.forced and oracle and replay and tag is not None
        rows.append(((q, rep), result))
    return rows


def certificate_row(q: int, a: int) -> list:
    """
    Report row for a single (q, a), carrying the full certificate.

    For a in {1, q-1} a NotForced verdict is expected, not a violation.

    :param int q: prime power
    :param int a: unit
    :return: list with one ((q, a), result)
    :rtype: list
    """

    cert = decide_even_lemma(q, a)
    oracle = threshold_oracle(q, a)
    replay = replay_certificate(cert)
    trivial = a in (1, q - 1)
    result = cert.to_dict()
    result.update({"units": 1, "oracle": oracle, "replay": replay})
    result["ok"] = replay and cert.forced == oracle and (cert.forced or trivial)
    return [((q, a), result)]


def verify_lemma_exhaustive(q_max: int, jobs: int = 1, **kwargs) -> VerificationReport:
    """
    Lemma check for every prime power q <= q_max and unit a not in {1, q-1}.

    The verdict depends on a only through <+-a>, so each subgroup is
    decided once and its row carries the number of units it stands for.

    :param int q_max: largest modulus
    :param int jobs: worker processes (1)
    :return: VerificationReport
    :rtype: VerificationReport
    """

    if q_max < 2:
        raise ParameterError(f"q_max must be >= 2, got {q_max}")
    return scan(
        CMD_VERIFY_LEMMA, prime_powers(q_max), lemma_rows, {"q_max": q_max}, jobs, **kwargs
    )


def oracle_rows(q: int) -> list:
    """
    Report rows comparing closure and threshold oracle for every unit mod q.

    :param int q: prime power
    :return: list of ((q, a), result)
    :rtype: list
    """

    rows = []
    for a in make_group(q).units:
        verdict = decide_even_lemma(q, a).verdict
        oracle = threshold_oracle(q, a)
        rows.append(
            (
                (q, a),
                {
                    "q": q,
                    "a": a,
                    "units": 1,
                    "verdict": verdict,
                    "oracle": oracle,
                    "ok": (verdict == CONSTANT_FORCED) == oracle,
                },
            )
        )
    return rows


def verify_oracle_equivalence(q_max: int, jobs: int = 1, **kwargs) -> VerificationReport:
    """
    Closure verdict against threshold oracle for every (q, a), +-1 included.

    :param int q_max: largest modulus
    :param int jobs: worker processes (1)
    :return: VerificationReport
    :rtype: VerificationReport
    """

    return scan(
        CMD_ORACLE, prime_powers(q_max), oracle_rows, {"q_max": q_max}, jobs, **kwargs
    )


def _step_checks(g: UnitGroup) -> tuple:
    """
    Structural facts behind the proof cases, for one modulus.

    :return: tuple of (checks dict, nontrivial class count, min 2.b_max^2 - q)
    :rtype: tuple
    """

    q, p, r = g.q, g.p, g.r
    flags = {}
    margins = []
    classes = [key for key in pm_classes(g) if len(key) > 2]
    for key in classes:
        bm = max(x for x in key if 2 * x <= q)
        margins.append(2 * bm * bm - q)
        if p == 2 and q >= 8:
            flags.setdefault("p2_b_max", []).append(bm == 2 ** (r - 1) - 1)
        if p == 3 and len(key) % 3 == 0:
            flags.setdefault("p3_subgroup", []).append(3 ** (r - 1) + 1 in key and 3 * bm > q)
        if p == 5 and len(key) % 5 == 0:
            flags.setdefault("p5_subgroup", []).append(2 * 5 ** (r - 1) + 1 in key and 3 * bm > q)
        if p == 5 and len(key) == 4:
            flags.setdefault("p5_order4", []).append(bm * bm % q == q - 1 and bm * bm + 1 >= q)
    checks = {name: all(vals) for name, vals in flags.items()}
    checks["square_margin"] = all(m > 0 for m in margins)
    if p == 2 and q >= 8:
        half = 2 ** (r - 1)
        checks["involutions"] = order_two_elements(g) == (half - 1, half + 1, q - 1)
    elif p != 2:
        checks["involutions"] = order_two_elements(g) == (g.minus_one,)
    if p == 3 and q >= 9:
        top = 3 ** (r - 1)
        checks["order3"] = elements_of_order(g, 3) == (top + 1, 2 * top + 1)
    if q == 25:
        checks["b_max_25"] = b_max(g, 7) == 7
    return checks, len(classes), min(margins, default=None)


def step_row(q: int) -> list:
    """
    Report row for the proof-case structure of one modulus.

    :param int q: prime power
    :return: list with one (q, result)
    :rtype: list
    """

    g = make_group(q)
    checks, nclasses, margin = _step_checks(g)
    result = {
        "q": q,
        "p": g.p,
        "r": g.r,
        "classes": nclasses,
        "min_margin": margin,
        "checks": checks,
        "ok": all(checks.values()),
    }
    return [(q, result)]


def verify_step_structure(q_max: int, jobs: int = 1, **kwargs) -> VerificationReport:
    """
    Proof-case structural claims for every prime power q <= q_max.

    :param int q_max: largest modulus
    :param int jobs: worker processes (1)
    :return: VerificationReport
    :rtype: VerificationReport
    """

    return scan(CMD_STEPS, prime_powers(q_max), step_row, {"q_max": q_max}, jobs, **kwargs)
