"""Variable-substitution routes from the one-parameter families to the
two-parameter one.

The defining substitutions act on a family's QPSpec pair (u, v), not on expanded
polynomials: applying them termwise to an expanded number gives the wrong
value (see the test suite for the n = 3 counterexample).  The monomial
images used by :func:`h1_to_h` and :func:`h2_to_h` are the unique
solutions of the defining relations

* route 1: q^(1/4) * p^(-1/4) -> a and q^(1/2) * p^(1/2) -> t, solved by
  q -> a^2*t, p -> a^-2*t (from a^4 = q/p, t^2 = q*p);
* route 2: q^3 * p -> a^4 and q^(3/2) * p^(-1/2) -> t, solved by
  q -> a^(2/3)*t^(1/3), p -> a^2*t^-1.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from qpknot.errors import SpecMismatchError
from qpknot.laurent import LaurentPoly, Monomial
from qpknot.qpnumbers import Family, QPSpec, family_spec


class SpecMap(enum.Enum):
    ALEX_TO_H1 = "alex-to-h1"
    JONES_TO_H2 = "jones-to-h2"


_MAP_TABLE = {
    SpecMap.ALEX_TO_H1: (Family.ALEXANDER, Family.H1),
    SpecMap.JONES_TO_H2: (Family.JONES, Family.H2),
}


def apply_spec_map(m: SpecMap, s: QPSpec) -> QPSpec:
    """Send a source spec to its two-parameter counterpart.

    The input must equal the map's expected source pair; raises
    :class:`SpecMismatchError` otherwise.
    """
    source_family, target_family = _MAP_TABLE[m]
    expected = family_spec(source_family)
    if s != expected:
        raise SpecMismatchError(
            f"{m.value} expects source ({expected.u}, {expected.v}), "
            f"got ({s.u}, {s.v})"
        )
    return family_spec(target_family)


_H1_IMAGES = {
    "q": Monomial({"a": 2, "t": 1}),
    "p": Monomial({"a": -2, "t": 1}),
}

_H2_IMAGES = {
    "q": Monomial({"a": Fraction(2, 3), "t": Fraction(1, 3)}),
    "p": Monomial({"a": 2, "t": -1}),
}


def h1_to_h(p: LaurentPoly) -> LaurentPoly:
    """Rewrite a route-1 (q, p) polynomial in the (a, t) variables."""
    return p.substitute(_H1_IMAGES)


def h2_to_h(p: LaurentPoly) -> LaurentPoly:
    """Rewrite a route-2 (q, p) polynomial in the (a, t) variables.

    The image of q has exponent denominator 3; all route-2 numbers land
    back on integer exponents after substitution.
    """
    return p.substitute(_H2_IMAGES)
