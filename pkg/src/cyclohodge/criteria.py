"""
Hypotheses of the Hodge group theorem:

- (A) n = q + 1
- (B) p odd and n != 1 mod q
- (C) p = 2, n != 1 mod q and n != q - 1 mod 2q

together with the coprimality witness: a unit a with gcd([na/q], n - 1) = 1.

Created on 14 Oct 2026

:author: semuadmin
:copyright: SEMU Consulting © 2026
:license: BSD 3-Clause
"""

from dataclasses import asdict, dataclass
from logging import getLogger
from math import gcd

from cyclohodge.hodgedata import degree_grid, validate_degree
from cyclohodge.hodgescanner import scan
from cyclohodge.hodgetypes_core import CMD_CHECK
from cyclohodge.unitgroup import make_group

logger = getLogger(__name__)


@dataclass(frozen=True)
class ConditionReport:
    """
    Evaluated hypotheses for (n, q).
    """

    n: int
    q: int
    p: int
    holds_A: bool  # pylint: disable=invalid-name
    holds_B: bool  # pylint: disable=invalid-name
    holds_C: bool  # pylint: disable=invalid-name
    witness: int
    n_less_than_q: bool

    @property
    def any_holds(self) -> bool:
        """
        At least one of (A), (B), (C) holds.

        :return: True/False
        :rtype: bool
        """

        return self.holds_A or self.holds_B or self.holds_C

    @property
    def witness_exists(self) -> bool:
        """
        A coprimality witness was found.

        :return: True/False
        :rtype: bool
        """

        return self.witness is not None


def find_coprime_witness(n: int, q: int):
    """
    Smallest unit a with gcd([na/q], n - 1) = 1 (exhaustive search).

    :param int n: degree
    :param int q: prime power
    :return: unit a, or None if none exists
    :rtype: int or None
    """

    for a in make_group(q).units:
        if gcd(n * a // q, n - 1) == 1:
            return a
    return None


def check_conditions(n: int, q: int) -> ConditionReport:
    """
    Evaluate conditions (A), (B), (C) and search for a witness.

    :param int n: degree >= 4, not divisible by p
    :param int q: prime power
    :return: ConditionReport
    :rtype: ConditionReport
    :raises: InvalidParams, NotPrimePower
    """

    g = make_group(q)
    validate_degree(n, g)
    not_one = n % q != 1
    return ConditionReport(
        n=n,
        q=q,
        p=g.p,
        holds_A=n == q + 1,
        holds_B=g.p != 2 and not_one,
        holds_C=g.p == 2 and not_one and n % (2 * q) != q - 1,
        witness=find_coprime_witness(n, q),
        n_less_than_q=n < q,
    )


def witness_valid(n: int, q: int, a) -> bool:
    """
    Re-check a witness independently of the search.

    :param int n: degree
    :param int q: prime power
    :param a: candidate unit or None
    :return: True if a is a valid witness
    :rtype: bool
    """

    if a is None:
        return False
    p = make_group(q).p
    return 1 <= a <= q - 1 and gcd(a, p) == 1 and gcd(n * a // q, n - 1) == 1


def condition_row(cell: tuple) -> list:
    """
    Report row for one (n, q): forward implication (A or B or C) => witness,
    converse measured but never asserted.

    :param tuple cell: (n, q)
    :return: list with one (cell, result)
    :rtype: list
    """

    n, q = cell
    rep = check_conditions(n, q)
    valid = witness_valid(n, q, rep.witness)
    result = asdict(rep)
    result.update(
        {
            "any_holds": rep.any_holds,
            "witness_exists": rep.witness_exists,
            "witness_valid": valid or not rep.witness_exists,
            "converse_fails": rep.witness_exists and not rep.any_holds,
            "exclusive_BC": not (rep.holds_B and rep.holds_C),
        }
    )
    result["ok"] = (
        (not rep.any_holds or valid)
        and result["witness_valid"]
        and result["exclusive_BC"]
    )
    return [(cell, result)]


def scan_condition_implication(n_max: int, q_max: int, jobs: int = 1, **kwargs):
    """
    Check (A or B or C) => witness over every valid (n, q) with
    4 <= n <= n_max, q <= q_max (n > q included, since (A) needs it).

    :param int n_max: largest degree
    :param int q_max: largest modulus
    :param int jobs: worker processes (1)
    :return: VerificationReport
    :rtype: VerificationReport
    """

    cells = degree_grid(n_max, q_max, include_n_greater_q=True)
    report = scan(
        CMD_CHECK,
        cells,
        condition_row,
        {"n_max": n_max, "q_max": q_max},
        jobs,
        **kwargs,
    )
    tally_conditions(report)
    return report


def tally_conditions(report):
    """
    Add the informational counters (conditions holding, witnesses found,
    converse failures) to a condition report.

    :param VerificationReport report: report with condition rows
    """

    for res in report.results:
        report.note("any_holds", int(res.get("any_holds", False)))
        report.note("witness_exists", int(res.get("witness_exists", False)))
        report.note("converse_fails", int(res.get("converse_fails", False)))
    conv = report.informational.get("converse_fails", 0)
    if conv:
        logger.info("%d cell(s) have a witness but no condition holds", conv)
