"""
Combinatorics of embeddings of Q(zeta_q) identified with units mod q:
complex conjugation a -> q - a, orbits of ordered pairs under the
diagonal translation (a, b) -> (xa, xb), good pairs (a != b, a != q - b)
and CM types.

Also hosts the full grid scan, which ties profiles, conditions,
separation and orbit cover together per (n, q).

Created on 14 Oct 2026

:author: semuadmin
:copyright: SEMU Consulting © 2026
:license: BSD 3-Clause
"""

from dataclasses import dataclass
from itertools import product
from logging import getLogger

from cyclohodge.criteria import condition_row, tally_conditions
from cyclohodge.exceptions import BadPair, DomainTooLarge, ParameterError
from cyclohodge.hodgedata import HodgeProfile, build_profile, degree_grid, is_h_constant
from cyclohodge.hodgereport import VerificationReport
from cyclohodge.hodgescanner import scan
from cyclohodge.hodgetypes_core import CM_ENUM_LIMIT, CMD_ORBITS, CMD_SCAN
from cyclohodge.lemmaengine import separation_summary
from cyclohodge.unitgroup import check_unit, make_group

logger = getLogger(__name__)


@dataclass(frozen=True)
class PairOrbit:
    """
    Orbit of an ordered pair of distinct units under diagonal translation.
    """

    q: int
    representative: tuple
    members: tuple

    @property
    def size(self) -> int:
        """
        Getter for orbit size (always phi(q)).

        :return: number of pairs
        :rtype: int
        """

        return len(self.members)

    @property
    def is_good(self) -> bool:
        """
        Getter for good-pair status, constant on the orbit.

        :return: True if a != q - b for the representative
        :rtype: bool
        """

        a, b = self.representative
        return a != self.q - b


@dataclass(frozen=True)
class CMType:
    """
    One unit from each conjugate pair {a, q - a}.
    """

    q: int
    members: tuple


def conjugate(q: int, a: int) -> int:
    """
    Complex conjugate q - a.

    :param int q: prime power
    :param int a: unit
    :return: q - a
    :rtype: int
    :raises: ParameterError
    """

    check_unit(make_group(q), a)
    return q - a


def pair_orbit(q: int, a: int, b: int) -> PairOrbit:
    """
    Full orbit {(xa, xb)} of (a, b); the representative is the
    lexicographically least member.

    :param int q: prime power
    :param int a: unit
    :param int b: unit != a
    :return: PairOrbit
    :rtype: PairOrbit
    :raises: BadPair if a = b
    """

    g = make_group(q)
    check_unit(g, a)
    check_unit(g, b)
    if a == b:
        raise BadPair(f"Pair ({a}, {b}) has equal entries")
    members = tuple(sorted((x * a % q, x * b % q) for x in g.units))
    return PairOrbit(q, members[0], members)


def good_pairs(q: int) -> tuple:
    """
    All ordered good pairs (a, b): a != b and a != q - b.

    :param int q: prime power
    :return: ascending tuple of pairs
    :rtype: tuple
    """

    units = make_group(q).units
    return tuple((a, b) for a in units for b in units if a != b and a != q - b)


def good_pair_orbits(q: int) -> list:
    """
    Orbits of good pairs, one per ratio c = a/b not in {1, q-1},
    ordered by representative. The representative of the ratio-c orbit
    is (1, c^-1).

    :param int q: prime power
    :return: list of PairOrbit
    :rtype: list
    """

    g = make_group(q)
    orbits = [pair_orbit(q, c, 1) for c in g.units if c not in (1, g.minus_one)]
    return sorted(orbits, key=lambda o: o.representative)


def cm_type_count(q: int) -> int:
    """
    Number of CM types, 2^(phi(q)/2), without enumerating them.

    :param int q: prime power >= 3
    :return: count
    :rtype: int
    :raises: ParameterError if q < 3
    """

    if q < 3:
        raise ParameterError(f"CM types need q >= 3, got {q}")
    return 2 ** (make_group(q).phi // 2)


def cm_types(q: int, limit: int = CM_ENUM_LIMIT):
    """
    Lazily enumerate all CM types.

    :param int q: prime power >= 3
    :param int limit: largest phi(q)/2 allowed (CM_ENUM_LIMIT)
    :return: generator of CMType
    :raises: DomainTooLarge (with .count) if phi(q)/2 > limit
    """

    count = cm_type_count(q)
    g = make_group(q)
    if g.phi // 2 > limit:
        raise DomainTooLarge(
            f"{count} CM types for q={q} exceeds enumeration bound 2^{limit}", count
        )
    return (
        CMType(q, tuple(sorted(choice)))
        for choice in product(*((a, q - a) for a in g.half))
    )


def is_cm_type(q: int, members) -> bool:
    """
    Check that members holds exactly one of a, q - a for every unit a.

    :param int q: prime power >= 3
    :param members: iterable of units
    :return: True/False
    :rtype: bool
    """

    g = make_group(q)
    members = list(members)
    chosen = set(members)
    if len(chosen) != len(members) or not chosen <= set(g.units):
        return False
    return len(chosen) * 2 == g.phi and all((a in chosen) != (q - a in chosen) for a in g.half)


def cm_dimension_count(profile: HodgeProfile, cm_type) -> tuple:
    """
    Both sides of the dimension count half_deg.(e^2 - 1) = sum over the
    CM type of (e^2 - 1), e = dim_E V.

    :param HodgeProfile profile: profile
    :param cm_type: CMType or iterable of units
    :return: tuple of (left, right)
    :rtype: tuple
    :raises: ParameterError if cm_type is not a CM type
    """

    members = cm_type.members if isinstance(cm_type, CMType) else tuple(cm_type)
    if profile.q < 3 or not is_cm_type(profile.q, members):
        raise ParameterError(f"{members} is not a CM type mod {profile.q}")
    block = profile.e_dim**2 - 1
    return (profile.group.phi // 2 * block, sum(block for _ in members))


def orbit_cover_summary(profile: HodgeProfile) -> dict:
    """
    First member (a0, b0) of each good-pair orbit with H(a0) != H(b0).

    :param HodgeProfile profile: profile
    :return: dict of {PairOrbit: witness pair or None}
    :rtype: dict
    """

    hquad = profile.hquad
    return {
        orbit: next(((a, b) for a, b in orbit.members if hquad[a] != hquad[b]), None)
        for orbit in good_pair_orbits(profile.q)
    }


def orbit_cover_rows(cell: tuple) -> list:
    """
    One row per good-pair orbit of the profile (n, q).

    :param tuple cell: (n, q)
    :return: list of ((n, q, a, b), result)
    :rtype: list
    """

    n, q = cell
    profile = build_profile(n, q)
    h_const = is_h_constant(profile)[0]
    rows = []
    for orbit, wit in orbit_cover_summary(profile).items():
        a, b = orbit.representative
        rows.append(
            (
                (n, q, a, b),
                {
                    "n": n,
                    "q": q,
                    "orbit_a": a,
                    "orbit_b": b,
                    "size": orbit.size,
                    "witness_a": None if wit is None else wit[0],
                    "witness_b": None if wit is None else wit[1],
                    "ok": wit is not None or h_const,
                },
            )
        )
    return rows


def orbit_separation_cover(profile: HodgeProfile) -> VerificationReport:
    """
    Orbit-by-orbit separation check: every good-pair orbit has a member
    (a0, b0) with h(a0) != h(b0). A missing witness is a violation only
    when h is not constant.

    :param HodgeProfile profile: profile
    :return: VerificationReport
    :rtype: VerificationReport
    """

    report = VerificationReport(CMD_ORBITS, {"n": profile.n, "q": profile.q})
    for cell, result in orbit_cover_rows((profile.n, profile.q)):
        report.add(cell, result)
    return report


def verify_orbit_cover(
    n_max: int, q_max: int, include_n_greater_q: bool = False, jobs: int = 1, **kwargs
) -> VerificationReport:
    """
    orbit_separation_cover over a grid of profiles.

    :param int n_max: largest degree
    :param int q_max: largest modulus
    :param bool include_n_greater_q: include n > q (False)
    :param int jobs: worker processes (1)
    :return: VerificationReport
    :rtype: VerificationReport
    """

    cells = degree_grid(n_max, q_max, include_n_greater_q)
    invocation = {
        "n_max": n_max,
        "q_max": q_max,
        "include_n_greater_q": include_n_greater_q,
    }
    return scan(CMD_ORBITS, cells, orbit_cover_rows, invocation, jobs, **kwargs)


def scan_row(cell: tuple) -> list:
    """
    Full check of one (n, q): profile, conditions, separation by ratio,
    orbit cover (which must agree with it) and the CM dimension count.

    :param tuple cell: (n, q)
    :return: list with one (cell, result)
    :rtype: list
    """

    n, q = cell
    profile = build_profile(n, q)
    g = profile.group
    h_const, _ = is_h_constant(profile)
    cond = condition_row(cell)[0][1]
    ratios = separation_summary(profile)
    cover = orbit_cover_summary(profile)
    sep_ok = all(y is not None for y in ratios.values())
    cover_ok = all(w is not None for w in cover.values())
    cm_dim = None
    if q >= 3:
        left, right = cm_dimension_count(profile, CMType(q, g.half))
        cm_dim = left == right
    result = {
        "n": n,
        "q": q,
        "h_constant": h_const,
        "any_holds": cond["any_holds"],
        "witness": cond["witness"],
        "witness_exists": cond["witness_exists"],
        "converse_fails": cond["converse_fails"],
        "good_pairs": g.phi * len(ratios),
        "separated": g.phi * sum(1 for y in ratios.values() if y is not None),
        "orbits": len(cover),
        "orbits_witnessed": sum(1 for w in cover.values() if w is not None),
        "agreement": sep_ok == cover_ok,
        "cm_dimension": cm_dim,
    }
    result["ok"] = (
        (h_const or sep_ok)
        and result["agreement"]
        and cm_dim is not False
        and cond["ok"]
    )
    return [(cell, result)]


def full_scan(
    n_max: int, q_max: int, include_n_greater_q: bool = False, jobs: int = 1, **kwargs
) -> VerificationReport:
    """
    scan_row over every valid (n, q) in the grid.

    :param int n_max: largest degree
    :param int q_max: largest modulus
    :param bool include_n_greater_q: include n > q (False)
    :param int jobs: worker processes (1)
    :return: VerificationReport
    :rtype: VerificationReport
    """

    cells = degree_grid(n_max, q_max, include_n_greater_q)
    invocation = {
        "n_max": n_max,
        "q_max": q_max,
        "include_n_greater_q": include_n_greater_q,
    }
    report = scan(CMD_SCAN, cells, scan_row, invocation, jobs, **kwargs)
    tally_conditions(report)
    return report
