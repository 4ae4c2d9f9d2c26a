"""
Unit group (Z/qZ)^* for a prime power q = p^r.

All residues are canonical representatives in [1, q-1] and every
set-valued result is returned as an ascending tuple, so that reports
built from them are byte-stable.

Created on 14 Oct 2026

:author: semuadmin
:copyright: SEMU Consulting © 2026
:license: BSD 3-Clause
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from sympy import n_order, primerange

from cyclohodge.exceptions import ParameterError
from cyclohodge.hodgehelpers import max_q, prime_power, totient_pp


class UnitGroup:
    """
    UnitGroup class.
    """

    def __init__(self, q: int):
        """Constructor.

        :param int q: prime power modulus >= 2
        :raises: NotPrimePower, QBoundError
        """

        # object is mutable during initialisation only
        super().__setattr__("_immutable", False)

        self._p, self._r = prime_power(q)
        self._q = q
        self._phi = totient_pp(self._p, self._r)
        self._units = tuple(a for a in range(1, q) if a % self._p)
        self._unitset = frozenset(self._units)
        self._half = tuple(a for a in self._units if 2 * a <= q)

        self._immutable = True

    def __setattr__(self, name, value):
        """
        Override setattr to make object immutable after instantiation.

        :param str name: attribute name
        :param object value: attribute value
        :raises: ParameterError
        """

        if self._immutable:
            raise ParameterError(
                f"Object is immutable. Updates to {name} not permitted after initialisation."
            )
        super().__setattr__(name, value)

    def __contains__(self, a: int) -> bool:
        return a in self._unitset

    def __len__(self) -> int:
        return self._phi

    def __eq__(self, other) -> bool:
        return isinstance(other, UnitGroup) and other.q == self._q

    def __hash__(self) -> int:
        return hash(("UnitGroup", self._q))

    def __str__(self) -> str:
        """
        Human readable representation.

        :return: human readable representation
        :rtype: str
        """

        return f"<UnitGroup(q={self._q}, p={self._p}, r={self._r}, phi={self._phi})>"

    def __repr__(self) -> str:
        """
        Machine readable representation.

        eval(repr(obj)) = obj

        :return: machine readable representation
        :rtype: str
        """

        return f"UnitGroup({self._q})"

    @property
    def q(self) -> int:
        """
        Getter for modulus.

        :return: q
        :rtype: int
        """

        return self._q

    @property
    def p(self) -> int:
        """
        Getter for prime.

        :return: p
        :rtype: int
        """

        return self._p

    @property
    def r(self) -> int:
        """
        Getter for exponent.

        :return: r
        :rtype: int
        """

        return self._r

    @property
    def phi(self) -> int:
        """
        Getter for group order phi(q) = (p-1)p^(r-1).

        :return: phi(q)
        :rtype: int
        """

        return self._phi

    @property
    def units(self) -> tuple:
        """
        Getter for canonical unit list {a : 1 <= a <= q-1, gcd(a,p) = 1}.

        :return: ascending tuple of units
        :rtype: tuple
        """

        return self._units

    @property
    def half(self) -> tuple:
        """
        Getter for the members of [1,q/2]_Z.

        :return: ascending tuple
        :rtype: tuple
        """

        return self._half

    @property
    def minus_one(self) -> int:
        """
        Getter for the canonical representative of -1.

        :return: q - 1
        :rtype: int
        """

        return self._q - 1


@dataclass(frozen=True)
class HalfRange:
    """
    Integers in [lo, hi] coprime to p.
    """

    lo: int
    hi: int
    members: tuple

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)


def make_group(q: int) -> UnitGroup:
    """
    Construct (or fetch from cache) the unit group of a prime power.

    :param int q: modulus >= 2
    :return: UnitGroup
    :rtype: UnitGroup
    :raises: NotPrimePower, QBoundError
    """

    prime_power(q)  # validates q and the safety cap before the cache
    return _cached_group(q)


@lru_cache(maxsize=512)
def _cached_group(q: int) -> UnitGroup:
    return UnitGroup(q)


def mul(g: UnitGroup, a: int, b: int) -> int:
    """
    Multiply two units.

    :param UnitGroup g: group
    :param int a: unit
    :param int b: unit
    :return: canonical a*b mod q
    :rtype: int
    """

    return a * b % g.q


def inv(g: UnitGroup, a: int) -> int:
    """
    Multiplicative inverse.

    :param UnitGroup g: group
    :param int a: unit
    :return: canonical a^-1 mod q
    :rtype: int
    """

    return pow(a, -1, g.q)


def order(g: UnitGroup, a: int) -> int:
    """
    Multiplicative order of a unit.

    :param UnitGroup g: group
    :param int a: unit
    :return: least k >= 1 with a^k = 1 mod q
    :rtype: int
    """

    return int(n_order(a, g.q))


def fold(g: UnitGroup, x: int) -> int:
    """
    Representative of {x, -x} in [1,q/2].

    :param UnitGroup g: group
    :param int x: residue
    :return: min(x mod q, q - x mod q)
    :rtype: int
    """

    y = x % g.q
    return min(y, g.q - y)


def subgroup_pm(g: UnitGroup, a: int) -> tuple:
    """
    Subgroup <+-a> generated by a and -1, computed by
    breadth-first closure under multiplication.

    :param UnitGroup g: group
    :param int a: unit
    :return: ascending tuple of members
    :rtype: tuple
    """

    gens = (a % g.q, g.minus_one)
    seen = {1}
    queue = deque([1])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = x * s % g.q
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return tuple(sorted(seen))


def b_max(g: UnitGroup, a: int) -> int:
    """
    Maximal element of <+-a> within [1,q/2]_Z.

    :param UnitGroup g: group
    :param int a: unit
    :return: b_max
    :rtype: int
    """

    return max(x for x in subgroup_pm(g, a) if 2 * x <= g.q)


def range_coprime(g: UnitGroup, x: int, y: int) -> HalfRange:
    """
    The set [x,y]_Z of integers in [x,y] coprime to p.

    :param UnitGroup g: group
    :param int x: lower bound
    :param int y: upper bound
    :return: HalfRange
    :rtype: HalfRange
    :raises: ParameterError if x > y
    """

    if x > y:
        raise ParameterError(f"Empty bounds [{x},{y}]: lower bound exceeds upper")
    members = tuple(i for i in range(x, y + 1) if gcd(i, g.p) == 1)
    return HalfRange(x, y, members)


def half_range(g: UnitGroup) -> HalfRange:
    """
    The set [1,q/2]_Z.

    :param UnitGroup g: group
    :return: HalfRange
    :rtype: HalfRange
    """

    return HalfRange(1, g.q // 2, g.half)


def order_two_elements(g: UnitGroup) -> tuple:
    """
    Involutions of the unit group.

    :param UnitGroup g: group
    :return: ascending tuple of units u != 1 with u^2 = 1
    :rtype: tuple
    """

    return tuple(u for u in g.units if u != 1 and u * u % g.q == 1)


def elements_of_order(g: UnitGroup, k: int) -> tuple:
    """
    Units of exact multiplicative order k.

    :param UnitGroup g: group
    :param int k: order
    :return: ascending tuple of units
    :rtype: tuple
    """

    if k < 1 or g.phi % k:
        return ()
    return tuple(u for u in g.units if order(g, u) == k)


def pm_classes(g: UnitGroup) -> dict:
    """
    Partition the units by the subgroup <+-a> they generate.

    Each cyclic subgroup <a> is enumerated once by powers; its
    generators a^k (gcd(k, |<a>|) = 1) and their negatives all
    generate the same <+-a>.

    :param UnitGroup g: group
    :return: dict of {<+-a> as ascending tuple: ascending tuple of units a},
        ordered by smallest generating unit
    :rtype: dict
    """

    q = g.q
    assigned = set()
    classes = {}
    for a in g.units:
        if a in assigned:
            continue
        powers = [1]
        x = a
        while x != 1:
            powers.append(x)
            x = x * a % q
        size = len(powers)
        key = tuple(sorted(set(powers) | {q - y for y in powers}))
        bucket = classes.setdefault(key, set())
        for k, y in enumerate(powers):
            if gcd(k, size) != 1:
                continue
            for c in (y, q - y):
                if c not in assigned:
                    assigned.add(c)
                    bucket.add(c)
    ordered = sorted(classes.items(), key=lambda kv: min(kv[1]))
    return {key: tuple(sorted(members)) for key, members in ordered}


def prime_powers(q_max: int, q_min: int = 2) -> list:
    """
    All prime powers in [q_min, q_max], ascending.

    :param int q_max: upper bound
    :param int q_min: lower bound (2)
    :return: list of prime powers
    :rtype: list
    """

    cap = min(q_max, max_q())
    found = []
    for p in primerange(2, cap + 1):
        pk = int(p)
        while pk <= cap:
            if pk >= q_min:
                found.append(pk)
            pk *= p
    return sorted(found)


def check_unit(g: UnitGroup, a: int) -> int:
    """
    Validate a canonical unit.

    :param UnitGroup g: group
    :param int a: candidate unit
    :return: a
    :rtype: int
    :raises: ParameterError if a is not in [1, q-1] or shares a factor with q
    """

    if a not in g:
        raise ParameterError(f"{a!r} is not a canonical unit mod {g.q}")
    return a
