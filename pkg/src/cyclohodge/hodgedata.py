"""
Hodge multiplicities n_a = [na/q], the function h and the dimension
formulas attached to a parameter pair (n, q).

h(a) = ((n-1)/2 - n_a)^2 is a quarter-integer when n is even, so it is
held throughout as the exact integer H(a) = 4h(a) = (n - 1 - 2n_a)^2.

Created on 14 Oct 2026

:author: semuadmin
:copyright: SEMU Consulting © 2026
:license: BSD 3-Clause
"""

from dataclasses import dataclass
from functools import partial
from logging import getLogger
from math import isqrt

from cyclohodge.exceptions import HodgeInvariantError, InvalidParams, ParameterError
from cyclohodge.hodgehelpers import first_difference, is_monotone, table2str, totient_pp
from cyclohodge.hodgescanner import scan
from cyclohodge.hodgetypes_core import CMD_DIMS, CMD_PROFILES, MIN_DEGREE
from cyclohodge.unitgroup import UnitGroup, make_group, prime_powers

logger = getLogger(__name__)


def validate_degree(n: int, g: UnitGroup):
    """
    Check the standing hypotheses n >= 4 and p does not divide n.

    :raises: InvalidParams
    """

    if not isinstance(n, int) or n < MIN_DEGREE:
        raise InvalidParams(f"Degree n must be an integer >= {MIN_DEGREE}, got {n!r}")
    if n % g.p == 0:
        raise InvalidParams(f"p={g.p} divides n={n}")


class HodgeProfile:
    """
    HodgeProfile class.
    """

    def __init__(self, n: int, q: int, check: bool = True, perturb: int = None):
        """Constructor.

        Builds the tables n_a and H(a) over all units and, if check is set,
        re-verifies n_a + n_{q-a} = n - 1, H(a) = (n - 1 - 2n_a)^2, evenness and
        monotonicity on [1,q/2]_Z.

        :param int n: degree of f(x), >= 4, not divisible by p
        :param int q: prime power
        :param bool check: verify table invariants (True)
        :param int perturb: test-only: add 4 to H at this unit before the
            metadata is derived (None)
        :raises: InvalidParams, NotPrimePower, HodgeInvariantError
        """

        # object is mutable during initialisation only
        super().__setattr__("_immutable", False)

        self._group = make_group(q)
        validate_degree(n, self._group)
        self._n = n
        self._mult = {a: n * a // q for a in self._group.units}
        self._hquad = {a: (n - 1 - 2 * m) ** 2 for a, m in self._mult.items()}
        if perturb is not None:
            self._hquad[perturb] += 4
        self._even = all(self._hquad[a] == self._hquad[q - a] for a in self._group.units)
        self._monotone = is_monotone(self._hquad[a] for a in self._group.half)
        if check:
            self._check()

        self._immutable = True

    def _check(self):
        """
        Verify all table invariants.

        :raises: HodgeInvariantError
        """

        q, e_dim = self.q, self.e_dim
        for a, m in self._mult.items():
            if not 0 <= m <= e_dim:
                raise HodgeInvariantError(f"n_{a} = {m} outside [0, {e_dim}] for q={q}")
            if m + self._mult[q - a] != e_dim:
                raise HodgeInvariantError(
                    f"n_{a} + n_{q - a} = {m + self._mult[q - a]} != {e_dim} (n={self._n}, q={q})"
                )
            if self._hquad[a] != (e_dim - 2 * m) ** 2:
                raise HodgeInvariantError(f"H({a}) inconsistent with n_{a} (n={self._n}, q={q})")
        if not self._even:
            raise HodgeInvariantError(f"H is not even (n={self._n}, q={q})")
        if not self._monotone:
            raise HodgeInvariantError(f"H is not non-increasing on [1,q/2]_Z (n={self._n}, q={q})")

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

    def __str__(self) -> str:
        """
        Human readable representation.

        :return: human readable representation
        :rtype: str
        """

        hstr = ", ".join(str(self._hquad[a]) for a in self.group.half)
        return f"<HodgeProfile(n={self._n}, q={self.q}, H on [1,q/2]_Z=[{hstr}])>"

    def __repr__(self) -> str:
        """
        Machine readable representation.

        eval(repr(obj)) = obj

        :return: machine readable representation
        :rtype: str
        """

        return f"HodgeProfile({self._n}, {self.q})"

    @property
    def n(self) -> int:
        """
        Getter for degree n.

        :return: n
        :rtype: int
        """

        return self._n

    @property
    def q(self) -> int:
        """
        Getter for modulus q.

        :return: q
        :rtype: int
        """

        return self._group.q

    @property
    def group(self) -> UnitGroup:
        """
        Getter for unit group.

        :return: unit group
        :rtype: UnitGroup
        """

        return self._group

    @property
    def e_dim(self) -> int:
        """
        Getter for dim_E V = n - 1.

        :return: n - 1
        :rtype: int
        """

        return self._n - 1

    @property
    def mult(self) -> dict:
        """
        Getter for multiplicity table a -> n_a.

        :return: copy of table
        :rtype: dict
        """

        return dict(self._mult)

    @property
    def hquad(self) -> dict:
        """
        Getter for table a -> H(a) = 4h(a).

        :return: copy of table
        :rtype: dict
        """

        return dict(self._hquad)

    @property
    def is_even(self) -> bool:
        """
        Getter for evenness flag H(a) = H(q - a).

        :return: True/False
        :rtype: bool
        """

        return self._even

    @property
    def is_monotone(self) -> bool:
        """
        Getter for monotonicity flag (non-increasing on [1,q/2]_Z).

        :return: True/False
        :rtype: bool
        """

        return self._monotone


@dataclass(frozen=True)
class DimensionSet:
    """
    Integer dimensions attached to (n, q).
    """

    n: int
    q: int
    genus: int
    new_dim: int
    e_dim: int
    half_deg: int
    unitary_dim: int
    ss_lower_bound: int
    isogeny_terms: tuple


def multiplicity(n: int, q: int, a: int) -> int:
    """
    Hodge multiplicity n_a = [na/q].

    :param int n: degree
    :param int q: prime power
    :param int a: unit, 1 <= a <= q - 1
    :return: n_a in [0, n - 1]
    :rtype: int
    :raises: InvalidParams
    """

    g = make_group(q)
    validate_degree(n, g)
    if a not in g:
        raise InvalidParams(f"{a} is not a canonical unit mod {q}")
    return n * a // q


def build_profile(n: int, q: int) -> HodgeProfile:
    """
    Build and self-check the Hodge profile of (n, q).

    :param int n: degree
    :param int q: prime power
    :return: HodgeProfile
    :rtype: HodgeProfile
    :raises: InvalidParams, NotPrimePower, HodgeInvariantError
    """

    return HodgeProfile(n, q)


def _half_dim(n: int, phi: int) -> int:
    """
    (n - 1) * phi / 2, which is always integral under the hypotheses.
    """

    num = (n - 1) * phi
    if num % 2:
        raise HodgeInvariantError(f"(n-1)*phi = {num} is odd")
    return num // 2


def dimension_set(n: int, q: int) -> DimensionSet:
    """
    All dimension formulas for (n, q).

    For q = 2 the field E is Q itself and has no CM structure; half_deg is
    taken as phi(2) // 2 = 0, so the unitary dimension and bound vanish.

    :param int n: degree
    :param int q: prime power
    :return: DimensionSet
    :rtype: DimensionSet
    :raises: InvalidParams, NotPrimePower
    """

    g = make_group(q)
    validate_degree(n, g)
    e_dim = n - 1
    half_deg = g.phi // 2
    terms = tuple(_half_dim(n, totient_pp(g.p, i)) for i in range(1, g.r + 1))
    return DimensionSet(
        n=n,
        q=q,
        genus=_half_dim(n, q - 1),
        new_dim=_half_dim(n, g.phi),
        e_dim=e_dim,
        half_deg=half_deg,
        unitary_dim=half_deg * e_dim**2,
        ss_lower_bound=half_deg * (e_dim**2 - 1),
        isogeny_terms=terms,
    )


def is_h_constant(profile: HodgeProfile) -> tuple:
    """
    Check if h is constant on [1,q/2]_Z.

    :param HodgeProfile profile: profile
    :return: tuple of (True, None) or (False, witness pair (a, b))
    :rtype: tuple
    """

    pair = first_difference(profile.group.half, profile.hquad)
    return (pair is None, pair)


def h_difference_factored(profile: HodgeProfile, a: int, b: int) -> tuple:
    """
    Factors of h(a) - h(b) in the orientation (n_a - n_b)(dim_E V - n_a - n_b).

    Expanding the definition gives 4(n_a - n_b)(dim_E V - n_a - n_b) =
    H(b) - H(a), i.e. the product equals h(a) - h(b) only up to sign.

    :param HodgeProfile profile: profile
    :param int a: unit
    :param int b: unit
    :return: tuple of (n_a - n_b, (n - 1) - n_a - n_b)
    :rtype: tuple
    """

    mult = profile.mult
    return (mult[a] - mult[b], profile.e_dim - mult[a] - mult[b])


def distinct_criterion(profile: HodgeProfile, a: int, b: int) -> bool:
    """
    h(a) != h(b) iff n_a != n_b and n_a != dim_E V - n_b.

    :param HodgeProfile profile: profile
    :param int a: unit
    :param int b: unit
    :return: True if h(a) != h(b) by the multiplicity criterion
    :rtype: bool
    """

    mult = profile.mult
    return mult[a] != mult[b] and mult[a] != profile.e_dim - mult[b]


def degree_grid(
    n_max: int, q_max: int, include_n_greater_q: bool = False, n_min: int = MIN_DEGREE
) -> list:
    """
    Valid (n, q) cells: q a prime power <= q_max, n_min <= n <= n_max,
    p does not divide n, and n < q unless include_n_greater_q.

    :param int n_max: largest degree
    :param int q_max: largest modulus
    :param bool include_n_greater_q: also include n > q (False)
    :param int n_min: smallest degree (4)
    :return: list of (n, q) ordered by q then n
    :rtype: list
    """

    cells = []
    for q in prime_powers(q_max):
        p = make_group(q).p
        top = n_max if include_n_greater_q else min(n_max, q - 1)
        for n in range(max(n_min, MIN_DEGREE), top + 1):
            if n % p:
                cells.append((n, q))
    return cells


def dimension_row(cell: tuple) -> list:
    """
    Report row for dimension_set, with every identity re-checked.

    :param tuple cell: (n, q)
    :return: list with one (cell, result)
    :rtype: list
    """

    n, q = cell
    dims = dimension_set(n, q)
    g = make_group(q)
    checks = {
        "genus_formula": 2 * dims.genus == (n - 1) * (q - 1),
        "new_dim_formula": 2 * dims.new_dim == (n - 1) * g.phi,
        "isogeny_sum": sum(dims.isogeny_terms) == dims.genus,
        "unitary_formula": dims.unitary_dim == dims.half_deg * (n - 1) ** 2,
        "bound_formula": dims.ss_lower_bound == dims.half_deg * ((n - 1) ** 2 - 1),
    }
    result = {
        "n": n,
        "q": q,
        "genus": dims.genus,
        "new_dim": dims.new_dim,
        "e_dim": dims.e_dim,
        "half_deg": dims.half_deg,
        "unitary_dim": dims.unitary_dim,
        "ss_lower_bound": dims.ss_lower_bound,
        "isogeny_terms": list(dims.isogeny_terms),
        "checks": checks,
        "ok": all(checks.values()),
    }
    return [(cell, result)]


def profile_checks(profile: HodgeProfile) -> dict:
    """
    Independent re-check of every profile property.

    non_constant is None (not applicable) unless 4 <= n < q.

    :param HodgeProfile profile: profile (possibly unchecked)
    :return: dict of check name -> bool or None
    :rtype: dict
    """

    n, q, g = profile.n, profile.q, profile.group
    mult, hquad = profile.mult, profile.hquad
    e_dim = profile.e_dim
    complement = all(mult[a] + mult[q - a] == e_dim for a in g.units)
    even = all(hquad[a] == hquad[q - a] for a in g.units)
    monotone = is_monotone(hquad[a] for a in g.half)
    squares = all(
        isqrt(hquad[a]) ** 2 == hquad[a] and isqrt(hquad[a]) % 2 == e_dim % 2
        for a in g.units
    )
    non_constant = None
    if n < q:
        top = g.half[-1]
        non_constant = mult[1] == 0 and mult[top] >= 1 and not is_h_constant(profile)[0]
    return {
        "complement": complement,
        "even": even,
        "monotone": monotone,
        "squares": squares,
        "non_constant": non_constant,
    }


def profile_row(cell: tuple, perturb: bool = False) -> list:
    """
    Report row for one profile: table checks plus dimension identities.

    :param tuple cell: (n, q)
    :param bool perturb: test-only corruption of H at the unit 1 (False)
    :return: list with one (cell, result)
    :rtype: list
    """

    n, q = cell
    profile = HodgeProfile(n, q, check=False, perturb=1 if perturb else None)
    checks = profile_checks(profile)
    dims_ok = dimension_row(cell)[0][1]["ok"]
    result = dict(checks)
    result.update({"n": n, "q": q, "dimensions": dims_ok})
    result["ok"] = dims_ok and all(v for v in checks.values() if v is not None)
    if not result["ok"]:
        logger.debug(
            "H on [1,q/2]_Z for n=%d, q=%d:\n%s",
            n,
            q,
            table2str(profile.group.half, profile.hquad),
        )
    return [(cell, result)]


def verify_profiles(
    n_max: int,
    q_max: int,
    include_n_greater_q: bool = False,
    jobs: int = 1,
    perturb: bool = False,
    **kwargs,
):
    """
    Verify the complement identity, evenness, monotonicity, the square property,
    non-constancy and the dimension identities over a grid.

    :param int n_max: largest degree
    :param int q_max: largest modulus
    :param bool include_n_greater_q: include n > q (False)
    :param int jobs: worker processes (1)
    :param bool perturb: test-only corruption of every profile (False)
    :return: VerificationReport
    :rtype: VerificationReport
    """

    cells = degree_grid(n_max, q_max, include_n_greater_q)
    invocation = {
        "n_max": n_max,
        "q_max": q_max,
        "include_n_greater_q": include_n_greater_q,
    }
    return scan(
        CMD_PROFILES,
        cells,
        partial(profile_row, perturb=perturb),
        invocation,
        jobs,
        **kwargs,
    )


def verify_dimensions(
    n_max: int, q_max: int, include_n_greater_q: bool = False, jobs: int = 1, **kwargs
):
    """
    Dimension identities over a grid.

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
    return scan(CMD_DIMS, cells, dimension_row, invocation, jobs, **kwargs)
