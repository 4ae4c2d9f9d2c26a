"""
Collection of cyclohodge helper methods which can be used
outside the main group, profile and engine classes.

Created on 14 Oct 2026

:author: semuadmin
:copyright: SEMU Consulting © 2026
:license: BSD 3-Clause
"""

import os

from sympy import factorint

from cyclohodge.exceptions import NotPrimePower, ParameterError, QBoundError
from cyclohodge.hodgetypes_core import DEFAULT_MAX_Q, MAX_Q_ENV, NONINCREASING


def max_q() -> int:
    """
    Get the safety cap on the modulus q, honouring the
    CYCLO_HODGE_MAX_Q environment override.

    :return: largest admissible q
    :rtype: int
    :raises: ParameterError if the override is not an integer >= 2
    """

    val = os.environ.get(MAX_Q_ENV, "")
    if val.strip() == "":
        return DEFAULT_MAX_Q
    try:
        cap = int(val)
    except ValueError as err:
        raise ParameterError(f"{MAX_Q_ENV} must be an integer, got {val!r}") from err
    if cap < 2:
        raise ParameterError(f"{MAX_Q_ENV} must be >= 2, got {cap}")
    return cap


def prime_power(q: int) -> tuple:
    """
    Factor a prime power q = p^r.

    :param int q: modulus
    :return: tuple of (p, r)
    :rtype: tuple
    :raises: NotPrimePower, QBoundError
    """

    if not isinstance(q, int) or isinstance(q, bool):
        raise NotPrimePower(f"Modulus must be an integer, got {q!r}")
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    cap = max_q()
    if q > cap:
        raise QBoundError(f"q={q} exceeds safety cap {cap} (see {MAX_Q_ENV})")
    factors = factorint(q)
    if len(factors) != 1:
        fstr = " * ".join(f"{p}^{e}" for p, e in sorted(factors.items()))
        raise NotPrimePower(f"{q} = {fstr} is not a prime power")
    ((p, r),) = factors.items()
    return int(p), int(r)


def totient_pp(p: int, r: int) -> int:
    """
    Euler phi of a prime power p^r.

    :param int p: prime
    :param int r: exponent >= 1
    :return: (p - 1) * p^(r - 1)
    :rtype: int
    """

    return (p - 1) * p ** (r - 1)


def is_constant(values) -> bool:
    """
    Check if a sequence takes a single value (vacuously True if empty).

    :param values: iterable of values
    :return: True/False
    :rtype: bool
    """

    return len(set(values)) <= 1


def first_difference(domain, table: dict) -> tuple:
    """
    Find the first pair (domain[0], x) on which a table differs.

    :param domain: ordered domain
    :param dict table: function table
    :return: tuple of (a, b), or None if the table is constant on domain
    :rtype: tuple
    """

    domain = list(domain)
    if not domain:
        return None
    base = table[domain[0]]
    for x in domain[1:]:
        if table[x] != base:
            return (domain[0], x)
    return None


def is_monotone(values, direction: int = NONINCREASING) -> bool:
    """
    Check if a sequence is monotone in the given direction.

    :param values: sequence of comparable values
    :param int direction: NONINCREASING (1) or NONDECREASING (-1)
    :return: True/False
    :rtype: bool
    """

    values = list(values)
    if direction == NONINCREASING:
        return all(x >= y for x, y in zip(values, values[1:]))
    return all(x <= y for x, y in zip(values, values[1:]))


def even_extension(q: int, table: dict, units) -> dict:
    """
    Extend a table on [1,q/2]_Z to all units by h(x) = h(q - x).

    :param int q: modulus
    :param dict table: values on [1,q/2]_Z
    :param units: iterable of all units
    :return: values on all units
    :rtype: dict
    """

    return {u: table[min(u, q - u)] for u in units}


def table2str(domain, table: dict, cols: int = 8) -> str:
    """
    Format a function table in fixed-width columns e.g.

    001:9  002:1  003:1  004:9

    :param domain: ordered domain
    :param dict table: function table
    :param int cols: number of columns per line (8)
    :return: formatted table
    :rtype: str
    """

    cells = [f"{x:03}:{table[x]}" for x in domain]
    width = max((len(c) for c in cells), default=0) + 2
    lines = []
    for i in range(0, len(cells), cols):
        lines.append("".join(c.ljust(width) for c in cells[i : i + cols]).rstrip())
    return "\n".join(lines)
