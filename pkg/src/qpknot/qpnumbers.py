"""Two-parameter deformed integers [n] = (u^n - v^n)/(u - v).

A :class:`QPSpec` fixes the monomial pair (u, v); :class:`Family` names
the specs used by the knot-invariant machinery.  Each number is
computable by three independent routes (closed sum, two-step recurrence,
exact division), which the verification suite cross-checks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from qpknot.errors import NegativeIndexError
from qpknot.laurent import LaurentPoly, Monomial, exact_div
from qpknot import _kernel as _K


@dataclass(frozen=True)
class QPSpec:
    """Ordered monomial pair (u, v) defining the family [n]_{u,v}."""

    u: Monomial
    v: Monomial

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("u and v must differ, the defining quotient is singular")


class Family(enum.Enum):
    ALEXANDER = "alexander"
    JONES = "jones"
    HOMFLY = "homfly"
    H1 = "h1"
    H2 = "h2"
    BMQ = "bmq"


_T = Monomial.var("t")
_A = Monomial.var("a")
_Q = Monomial.var("q")
_P = Monomial.var("p")

_FAMILY_SPECS = {
    Family.ALEXANDER: QPSpec(_T, _T ** -1),
    Family.JONES: QPSpec(_T ** 3, _T),
    # (u, v) with u + v = a^2*(t + t^-1) and u*v = a^4, so that the pair
    # reproduces both knot coefficients of the two-variable invariant.
    Family.HOMFLY: QPSpec(Monomial({"a": 2, "t": 1}), Monomial({"a": 2, "t": -1})),
    Family.H1: QPSpec(_Q, _P ** -1),
    Family.H2: QPSpec(_Q ** 3, _P),
    Family.BMQ: QPSpec(_Q, _Q ** -1),
}


def family_spec(f: Family) -> QPSpec:
    """The defining (u, v) pair of a named family."""
    return _FAMILY_SPECS[f]


def _check_index(n: int) -> None:
    if not isinstance(n, int):
        raise TypeError("n must be an int")
    if n < 0:
        raise NegativeIndexError(f"[n] is undefined for n = {n}")


def qp_number(spec: QPSpec, n: int) -> LaurentPoly:
    """Closed-sum form: sum of u^(n-1-i) * v^i for i = 0..n-1.

    This is the primary definition; it is total and division-free.
    """
    _check_index(n)
    if n == 0:
        return LaurentPoly.zero()
    u = spec.u._key
    v = spec.v._key
    term = _K.mono_pow(u, n - 1, 1)
    step = _K.mono_mul(_K.mono_pow(u, -1, 1), v)
    out: dict = {}
    for _ in range(n):
        c = out.get(term, 0) + 1
        if c:
            out[term] = c
        elif term in out:
            del out[term]
        term = _K.mono_mul(term, step)
    return LaurentPoly._raw(out)


def qp_number_recurrence(spec: QPSpec, n: int) -> LaurentPoly:
    """Recurrence form: [k+1] = (u+v)*[k] - u*v*[k-1] from [0]=0, [1]=1."""
    _check_index(n)
    prev = LaurentPoly.zero()
    if n == 0:
        return prev
    cur = LaurentPoly.one()
    k1 = spec.u.as_poly() + spec.v.as_poly()
    k2 = -(spec.u * spec.v).as_poly()
    for _ in range(n - 1):
        prev, cur = cur, k1 * cur + k2 * prev
    return cur


def qp_number_division(spec: QPSpec, n: int) -> LaurentPoly:
    """Quotient form: exact division (u^n - v^n) / (u - v)."""
    _check_index(n)
    if n == 0:
        return LaurentPoly.zero()
    num = (spec.u ** n).as_poly() - (spec.v ** n).as_poly()
    den = spec.u.as_poly() - spec.v.as_poly()
    return exact_div(num, den)


def _monomial_quotient(num: LaurentPoly, den: LaurentPoly) -> Monomial:
    q = exact_div(num, den)
    if not q.is_monomial():
        raise RuntimeError(f"quotient is not a monomial: {q}")
    return q.as_monomial()


def homfly_alexander_multiplier(n: int) -> Monomial:
    """The single monomial [n]^H / [n]^A; checked to equal a^(2(n-1))."""
    if n < 1:
        raise NegativeIndexError(f"multiplier undefined for n = {n}")
    m = _monomial_quotient(
        qp_number(family_spec(Family.HOMFLY), n),
        qp_number(family_spec(Family.ALEXANDER), n),
    )
    if m != _A ** (2 * (n - 1)):
        raise RuntimeError(f"multiplier {m} is not a^{2 * (n - 1)}")
    return m


def homfly_jones_multiplier(n: int) -> Monomial:
    """The single monomial [n]^H / [n]^V.

    Direct division yields (a*t^-1)^(2(n-1)); callers compare it against
    tabulated closed forms themselves.
    """
    if n < 1:
        raise NegativeIndexError(f"multiplier undefined for n = {n}")
    return _monomial_quotient(
        qp_number(family_spec(Family.HOMFLY), n),
        qp_number(family_spec(Family.JONES), n),
    )
