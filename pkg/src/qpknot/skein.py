"""Skein recurrences for the torus knots T(2m+1,2) and torus links L(2m,2).

Both series obey two-term recurrences: consecutive entries are related by
the link coefficients (l1, l2), and knots-only steps by the knot
coefficients k1 = l1^2 + 2*l2, k2 = -l2^2.  Series indices follow the
common numbering L(n,2): odd n are knots (n = 2m+1), even n are links.

Variable conventions: Alexander and Jones series live in t, the
two-variable invariant in (a, t) for knots.  Its link entries carry an
inverse power of z = t^(1/2) - t^(-1/2) and are therefore generated and
stored in the (a, z) variables, where they are honest Laurent
polynomials; odd entries convert back to (a, t) exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from qpknot import _kernel as _K
from qpknot.errors import BadRangeError, NotExpressibleError
from qpknot.laurent import LaurentPoly, Monomial, exact_div, exact_sqrt
from qpknot.qpnumbers import Family, family_spec


class InvariantKind(enum.Enum):
    ALEXANDER = "alexander"
    JONES = "jones"
    HOMFLY = "homfly"


_KIND_FOR_FAMILY = {
    Family.ALEXANDER: InvariantKind.ALEXANDER,
    Family.JONES: InvariantKind.JONES,
    Family.HOMFLY: InvariantKind.HOMFLY,
}


def kind_for_family(f: Family) -> InvariantKind:
    try:
        return _KIND_FOR_FAMILY[f]
    except KeyError:
        raise ValueError(f"family {f.value} has no invariant kind") from None


def family_for_kind(kind: InvariantKind) -> Family:
    return Family(kind.value)


@dataclass(frozen=True)
class SkeinCoeffs:
    """Link-recurrence coefficient pair (l1, l2)."""

    l1: LaurentPoly
    l2: LaurentPoly


@dataclass(frozen=True)
class KnotCoeffs:
    """Knot-recurrence coefficient pair (k1, k2)."""

    k1: LaurentPoly
    k2: LaurentPoly


def _v(name: str, exp=1) -> LaurentPoly:
    return LaurentPoly.var(name, exp)


_HALF = Fraction(1, 2)


def link_coeffs(kind: InvariantKind) -> SkeinCoeffs:
    """The (l1, l2) pair of each invariant's defining crossing relation."""
    if kind is InvariantKind.ALEXANDER:
        return SkeinCoeffs(_v("t", _HALF) - _v("t", -_HALF), LaurentPoly.one())
    if kind is InvariantKind.JONES:
        return SkeinCoeffs(_v("t", Fraction(3, 2)) - _v("t", _HALF), _v("t", 2))
    a = _v("a")
    return SkeinCoeffs(a * (_v("t", _HALF) - _v("t", -_HALF)), _v("a", 2))


def knot_coeffs(kind: InvariantKind) -> KnotCoeffs:
    """k1 = l1^2 + 2*l2 and k2 = -l2^2 for the kind's link coefficients."""
    c = link_coeffs(kind)
    return KnotCoeffs(c.l1 * c.l1 + 2 * c.l2, -(c.l2 * c.l2))


def unlink2(kind: InvariantKind) -> LaurentPoly:
    """Value on the two-component unlink, the link-series seed at n = 0.

    Derived by applying the crossing relation to a kinked unknot diagram:
    (1 - l2) / l1.  For Alexander this is 0 and for Jones
    -t^(1/2) - t^(-1/2).  The two-variable value is not a Laurent
    polynomial in (a, t); it is returned in the (a, z) variables as
    (a^-1 - a) * z^-1.
    """
    if kind is InvariantKind.HOMFLY:
        zinv = Monomial.var("z", -1)
        return (_v("a", -1) - _v("a")) * zinv.as_poly()
    c = link_coeffs(kind)
    return exact_div(LaurentPoly.one() - c.l2, c.l1)


@dataclass(frozen=True)
class InvariantSeries:
    """Indexed family of polynomial values for one invariant kind.

    ``entries`` maps the series index n to the polynomial of L(n,2);
    knot series hold only odd n = 2m+1.
    """

    kind: InvariantKind
    indexing: str  # "knot" | "link"
    entries: Mapping[int, LaurentPoly]

    def __getitem__(self, n: int) -> LaurentPoly:
        return self.entries[n]

    def entry(self, n: int) -> LaurentPoly:
        return self.entries[n]

    def knot(self, m: int) -> LaurentPoly:
        """The torus knot T(2m+1,2) entry."""
        return self.entries[2 * m + 1]

    def indices(self) -> list[int]:
        return sorted(self.entries)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "indexing": self.indexing,
            "entries": [
                {"n": n, "poly": self.entries[n].to_json_dict()} for n in self.indices()
            ],
        }

    @classmethod
    def from_json_dict(cls, obj: Mapping) -> "InvariantSeries":
        entries = {
            int(e["n"]): LaurentPoly.from_json_dict(e["poly"]) for e in obj["entries"]
        }
        return cls(InvariantKind(obj["kind"]), obj["indexing"], entries)


def link_series(kind: InvariantKind, n_max: int) -> InvariantSeries:
    """Entries of L(n,2) for n up to n_max via the two-term recurrence.

    Seeds are entries[1] = 1 (unknot) and entries[0] = unlink2; the n = 0
    entry is kept only where it lives in the kind's own variables
    (Alexander, Jones).  The two-variable series is produced in (a, z).
    """
    if n_max < 2:
        raise BadRangeError(f"n_max must be at least 2, got {n_max}")
    if kind is InvariantKind.HOMFLY:
        l1 = _v("a") * _v("z")
        l2 = _v("a", 2)
        p0 = unlink2(kind)
        keep0 = False
    else:
        c = link_coeffs(kind)
        l1, l2 = c.l1, c.l2
        p0 = unlink2(kind)
        keep0 = True
    entries = {1: LaurentPoly.one()}
    if keep0:
        entries[0] = p0
    prev, cur = p0, LaurentPoly.one()
    for n in range(2, n_max + 1):
        prev, cur = cur, l1 * cur + l2 * prev
        entries[n] = cur
    return InvariantSeries(kind, "link", entries)


def knot_series(kind: InvariantKind, m_max: int) -> InvariantSeries:
    """Entries for the torus knots T(2m+1,2), m = 0..m_max.

    Seeds are the unknot (1) and the trefoil (k1 + k2); every entry is a
    Laurent polynomial in the kind's own variables.
    """
    if m_max < 0:
        raise BadRangeError(f"m_max must be nonnegative, got {m_max}")
    c = knot_coeffs(kind)
    entries = {1: LaurentPoly.one()}
    if m_max >= 1:
        entries[3] = c.k1 + c.k2
    prev, cur = entries[1], entries.get(3)
    for m in range(2, m_max + 1):
        prev, cur = cur, c.k1 * cur + c.k2 * prev
        entries[2 * m + 1] = cur
    return InvariantSeries(kind, "knot", entries)


def specialize_homfly(p: LaurentPoly, target: InvariantKind) -> LaurentPoly:
    """Collapse a two-variable (a, t) polynomial onto one target invariant
    by substituting a -> 1 (Alexander) or a -> t (Jones)."""
    if target is InvariantKind.ALEXANDER:
        image = Monomial.one()
    elif target is InvariantKind.JONES:
        image = Monomial.var("t")
    else:
        raise ValueError("target must be Alexander or Jones")
    return p.substitute({"a": image, "t": Monomial.var("t")})


def skein_from_numbers(f: Family) -> SkeinCoeffs:
    """Reconstruct (l1, l2) from a family's defining pair (u, v).

    Runs the reverse direction: k1 = u + v and k2 = -u*v, then
    l2 = +sqrt(-k2) and l1 = +sqrt(k1 - 2*l2), both square roots taken
    with positive leading coefficient.  For the three invariant families
    this lands exactly on link_coeffs.
    """
    spec = family_spec(f)
    k1 = spec.u.as_poly() + spec.v.as_poly()
    minus_k2 = (spec.u * spec.v).as_poly()
    l2 = exact_sqrt(minus_k2)
    l1 = exact_sqrt(k1 - 2 * l2)
    return SkeinCoeffs(l1, l2)


# -- the z = t^(1/2) - t^(-1/2) change of variable ---------------------------


@dataclass(frozen=True)
class AZForm:
    """A polynomial rewritten over (a, z) with z = t^(1/2) - t^(-1/2)."""

    poly: LaurentPoly


# Cache of z^j = (t^(1/2) - t^(-1/2))^j expansions.  Each entry stores
# the term dict over t plus a row list of (2 * t-exponent, coefficient)
# pairs so the peeling loop below can stay in integer arithmetic.
_Z_CACHE: dict[int, tuple[dict, list]] = {}


def _z_power(j: int) -> tuple[dict, list]:
    cached = _Z_CACHE.get(j)
    if cached is None:
        terms = {}
        rows = []
        for i in range(j + 1):
            coeff = math.comb(j, i) * (1 if i % 2 == 0 else -1)
            e = Fraction(j - 2 * i, 2)
            key = () if e == 0 else (("t", e.numerator, e.denominator),)
            terms[key] = coeff
            rows.append((j - 2 * i, coeff))
        cached = (terms, rows)
        _Z_CACHE[j] = cached
    return cached


def to_az_form(p: LaurentPoly) -> AZForm:
    """Rewrite an (a, t) polynomial as a polynomial in a and z.

    Groups terms by twice their t-exponent and peels the top layer
    against the matching power of z; raises
    :class:`NotExpressibleError` when a residue remains that no
    nonnegative power of z can produce.
    """
    extra = set(p.variables()) - {"a", "t"}
    if extra:
        raise ValueError(f"expected variables a and t only, found {sorted(extra)}")

    def residue_text(buckets: dict) -> str:
        terms: dict = {}
        for k, layer in buckets.items():
            for rest, c in layer.items():
                e = Fraction(k, 2)
                tkey = () if e == 0 else (("t", e.numerator, e.denominator),)
                terms[_K.mono_mul(rest, tkey)] = c
        return str(LaurentPoly._raw(terms))

    # buckets: (2 * t-exponent) -> {t-free monomial: coefficient}
    buckets: dict[int, dict] = {}
    for key, coeff in p._t.items():
        e = Fraction(0)
        rest = key
        for idx, (v, n, d) in enumerate(key):
            if v == "t":
                e = Fraction(n, d)
                rest = key[:idx] + key[idx + 1 :]
                break
        doubled = 2 * e
        if doubled.denominator != 1:
            raise NotExpressibleError(f"t exponent {e} is not a half-integer")
        buckets.setdefault(doubled.numerator, {})[rest] = coeff

    out: dict = {}
    while buckets:
        j = max(buckets)
        if j < 0:
            raise NotExpressibleError(
                f"residue {residue_text(buckets)} has no z-polynomial form"
            )
        layer = buckets.pop(j)
        _, rows = _z_power(j)
        zmono = () if j == 0 else (("z", j, 1),)
        for rest, coeff in layer.items():
            out[_K.mono_mul(rest, zmono)] = coeff
            # Skip the top row: popping the layer already removed it.
            for k, zcoeff in rows[1:]:
                bucket = buckets.get(k)
                if bucket is None:
                    bucket = buckets[k] = {}
                c = bucket.get(rest, 0) - coeff * zcoeff
                if c:
                    bucket[rest] = c
                else:
                    del bucket[rest]
                    if not bucket:
                        del buckets[k]
    return AZForm(LaurentPoly._raw(out))


def from_az_form(form: AZForm | LaurentPoly) -> LaurentPoly:
    """Substitute z -> t^(1/2) - t^(-1/2) into an (a, z) polynomial.

    Requires nonnegative integer z-exponents; link entries carrying z^-1
    have no Laurent image in t and raise :class:`NotExpressibleError`.
    """
    p = form.poly if isinstance(form, AZForm) else form
    out: dict = {}
    for key, coeff in p._t.items():
        zexp = Fraction(0)
        rest = key
        for idx, (v, n, d) in enumerate(key):
            if v == "z":
                zexp = Fraction(n, d)
                rest = key[:idx] + key[idx + 1 :]
                break
        if zexp.denominator != 1 or zexp < 0:
            raise NotExpressibleError(f"z exponent {zexp} has no Laurent image in t")
        terms, _ = _z_power(zexp.numerator)
        _K.poly_accum_term_mul(out, terms, rest, coeff)
    return LaurentPoly._raw(out)
