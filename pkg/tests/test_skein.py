"""Skein engine: coefficient tables, series generation, specialization,
the reverse square-root construction and the (a, z) change of variable."""


import pytest

from qpknot import (
    AZForm,
    BadRangeError,
    Family,
    InvariantKind,
    LaurentPoly,
    NotExpressibleError,
    from_az_form,
    knot_coeffs,
    knot_series,
    link_coeffs,
    link_series,
    parse_poly,
    skein_from_numbers,
    specialize_homfly,
    to_az_form,
    unlink2,
)
from qpknot.skein import InvariantSeries

A = InvariantKind.ALEXANDER
V = InvariantKind.JONES
H = InvariantKind.HOMFLY


class TestCoefficients:
    def test_link_coeffs(self):
        c = link_coeffs(A)
        assert (c.l1, c.l2) == (parse_poly("t^(1/2) - t^(-1/2)"), LaurentPoly.one())
        c = link_coeffs(V)
        assert (c.l1, c.l2) == (parse_poly("t^(3/2) - t^(1/2)"), parse_poly("t^2"))
        c = link_coeffs(H)
        assert (c.l1, c.l2) == (parse_poly("a*t^(1/2) - a*t^(-1/2)"), parse_poly("a^2"))

    def test_knot_coeffs(self):
        k = knot_coeffs(A)
        assert (k.k1, k.k2) == (parse_poly("t + t^-1"), parse_poly("-1"))
        k = knot_coeffs(V)
        assert (k.k1, k.k2) == (parse_poly("t^3 + t"), parse_poly("-t^4"))
        k = knot_coeffs(H)
        assert (k.k1, k.k2) == (parse_poly("a^2*t + a^2*t^-1"), parse_poly("-a^4"))

    def test_knot_coeffs_formula(self):
        for kind in InvariantKind:
            c = link_coeffs(kind)
            k = knot_coeffs(kind)
            assert k.k1 == c.l1 * c.l1 + 2 * c.l2
            assert k.k2 == -(c.l2 * c.l2)


class TestUnlink2:
    def test_alexander_vanishes(self):
        assert unlink2(A) == LaurentPoly.zero()

    def test_jones(self):
        assert unlink2(V) == parse_poly("-t^(1/2) - t^(-1/2)")

    def test_homfly_lives_in_az(self):
        # (1 - a^2)/(a*z) = (a^-1 - a) * z^-1
        assert unlink2(H) == parse_poly("a^-1*z^-1 - a*z^-1")

    def test_consistency_with_link_relation(self):
        # l1 * unlink2 + l2 * 1 = 1 (the relation that defined it)
        for kind in (A, V):
            c = link_coeffs(kind)
            assert c.l1 * unlink2(kind) + c.l2 == LaurentPoly.one()
        # same relation for the two-variable kind, taken in (a, z)
        l1z = parse_poly("a*z")
        l2z = parse_poly("a^2")
        assert l1z * unlink2(H) + l2z == LaurentPoly.one()


class TestLinkSeries:
    def test_alexander_entries(self):
        s = link_series(A, 4)
        assert s.entry(0) == LaurentPoly.zero()
        assert s.entry(1) == LaurentPoly.one()
        assert s.entry(2) == parse_poly("t^(1/2) - t^(-1/2)")  # Hopf link
        assert s.entry(3) == parse_poly("t - 1 + t^-1")  # trefoil

    def test_jones_hopf(self):
        s = link_series(V, 3)
        assert s.entry(2) == parse_poly("-t^(5/2) - t^(1/2)")
        assert s.entry(3) == parse_poly("t + t^3 - t^4")

    def test_homfly_entries_in_az(self):
        s = link_series(H, 3)
        assert 0 not in s.entries
        assert s.entry(2) == parse_poly("a*z + a*z^-1 - a^3*z^-1")
        assert s.entry(3) == parse_poly("a^2*z^2 + 2*a^2 - a^4")

    def test_homfly_odd_entries_convert_to_at(self):
        s = link_series(H, 7)
        knots = knot_series(H, 3)
        for m in range(0, 4):
            assert from_az_form(s.entry(2 * m + 1)) == knots.knot(m)

    def test_bad_range(self):
        with pytest.raises(BadRangeError):
            link_series(A, 1)

    def test_recurrence_holds_in_stored_entries(self):
        for kind in (A, V):
            c = link_coeffs(kind)
            s = link_series(kind, 9)
            for n in range(1, 9):
                assert s.entry(n + 1) == c.l1 * s.entry(n) + c.l2 * s.entry(n - 1)


class TestKnotSeries:
    def test_trefoils(self):
        assert knot_series(A, 1).knot(1) == parse_poly("t - 1 + t^-1")
        assert knot_series(V, 1).knot(1) == parse_poly("t + t^3 - t^4")
        assert knot_series(H, 1).knot(1) == parse_poly("a^2*t + a^2*t^-1 - a^4")

    def test_unknot(self):
        for kind in InvariantKind:
            assert knot_series(kind, 0).knot(0) == LaurentPoly.one()

    def test_cinquefoil_alexander(self):
        assert knot_series(A, 2).knot(2) == parse_poly("t^2 - t + 1 - t^-1 + t^-2")

    def test_cinquefoil_jones_homfly(self):
        assert knot_series(V, 2).knot(2) == parse_poly("t^2 + t^4 - t^5 + t^6 - t^7")
        assert knot_series(H, 2).knot(2) == parse_poly(
            "a^4*t^2 + a^4 + a^4*t^-2 - a^6*t - a^6*t^-1"
        )

    def test_knot_recurrence_reverified_from_entries(self):
        for kind in InvariantKind:
            k = knot_coeffs(kind)
            s = knot_series(kind, 12)
            for m in range(2, 13):
                n = 2 * m + 1
                assert s.entry(n) == k.k1 * s.entry(n - 2) + k.k2 * s.entry(n - 4)

    def test_matches_link_series(self):
        for kind in (A, V):
            knots = knot_series(kind, 10)
            links = link_series(kind, 21)
            for m in range(0, 11):
                assert knots.knot(m) == links.entry(2 * m + 1)

    def test_bad_range(self):
        with pytest.raises(BadRangeError):
            knot_series(A, -1)


class TestSpecialize:
    def test_trefoil_examples(self):
        trefoil = parse_poly("a^2*t + a^2*t^-1 - a^4")
        assert specialize_homfly(trefoil, A) == parse_poly("t + t^-1 - 1")
        assert specialize_homfly(trefoil, V) == parse_poly("t^3 + t - t^4")

    def test_unknot(self):
        one = LaurentPoly.one()
        assert specialize_homfly(one, A) == one
        assert specialize_homfly(one, V) == one

    def test_elementwise_over_series(self):
        hom = knot_series(H, 10)
        alex = knot_series(A, 10)
        jones = knot_series(V, 10)
        for m in range(0, 11):
            assert specialize_homfly(hom.knot(m), A) == alex.knot(m)
            assert specialize_homfly(hom.knot(m), V) == jones.knot(m)

    def test_rejects_homfly_target(self):
        with pytest.raises(ValueError):
            specialize_homfly(LaurentPoly.one(), H)


class TestSkeinFromNumbers:
    def test_invariant_families_round_trip(self):
        for fam, kind in ((Family.ALEXANDER, A), (Family.JONES, V), (Family.HOMFLY, H)):
            got = skein_from_numbers(fam)
            want = link_coeffs(kind)
            assert got.l1 == want.l1
            assert got.l2 == want.l2

    def test_positive_sign_convention(self):
        for fam in (Family.ALEXANDER, Family.JONES, Family.HOMFLY):
            got = skein_from_numbers(fam)
            assert got.l1.leading_term()[1] > 0
            assert got.l2.leading_term()[1] > 0

    def test_other_families_when_roots_exist(self):
        # the square roots leave the integer exponent lattice but exist
        got = skein_from_numbers(Family.H1)
        assert got.l1 == parse_poly("q^(1/2) - p^(-1/2)")
        assert got.l2 == parse_poly("q^(1/2)*p^(-1/2)")
        got = skein_from_numbers(Family.H2)
        assert got.l1 == parse_poly("q^(3/2) - p^(1/2)")
        assert got.l2 == parse_poly("q^(3/2)*p^(1/2)")
        got = skein_from_numbers(Family.BMQ)
        assert got.l1 == parse_poly("q^(1/2) - q^(-1/2)")
        assert got.l2 == LaurentPoly.one()


class TestAZForm:
    def test_trefoil(self):
        got = to_az_form(parse_poly("a^2*t + a^2*t^-1 - a^4"))
        assert got.poly == parse_poly("a^2*z^2 + 2*a^2 - a^4")

    def test_without_a(self):
        assert to_az_form(parse_poly("t - 1 + t^-1")).poly == parse_poly("z^2 + 1")

    def test_constant(self):
        assert to_az_form(LaurentPoly.one()).poly == LaurentPoly.one()

    def test_half_exponents(self):
        got = to_az_form(parse_poly("a*t^(1/2) - a*t^(-1/2)"))
        assert got.poly == parse_poly("a*z")

    def test_roundtrip_on_knot_entries(self):
        series = knot_series(H, 15)
        for m in range(0, 16):
            p = series.knot(m)
            assert from_az_form(to_az_form(p)) == p

    def test_not_expressible(self):
        with pytest.raises(NotExpressibleError):
            to_az_form(LaurentPoly.var("t"))
        with pytest.raises(NotExpressibleError):
            to_az_form(parse_poly("t + t^(1/3)"))
        # Jones polynomials are not symmetric under t -> 1/t
        with pytest.raises(NotExpressibleError):
            to_az_form(parse_poly("t + t^3 - t^4"))

    def test_rejects_foreign_variables(self):
        with pytest.raises(ValueError):
            to_az_form(LaurentPoly.var("q"))

    def test_from_az_rejects_negative_z_powers(self):
        with pytest.raises(NotExpressibleError):
            from_az_form(parse_poly("a*z + a*z^-1"))

    def test_hopf_entry_clears_after_multiplying_through(self):
        # z * P(Hopf) is a z-polynomial, so it has an exact t-form;
        # it must agree with z * l1 + l2 * (z * unlink2) computed in t.
        hopf = link_series(H, 2).entry(2)
        z = LaurentPoly.var("z")
        cleared = from_az_form(hopf * z)
        zt = parse_poly("t^(1/2) - t^(-1/2)")
        c = link_coeffs(H)
        assert cleared == c.l1 * zt + c.l2 * parse_poly("a^-1 - a")

    def test_az_form_wrapper(self):
        form = to_az_form(parse_poly("t - 2 + t^-1"))
        assert isinstance(form, AZForm)
        assert form.poly == parse_poly("z^2")


class TestKindFamilyBridge:
    def test_roundtrip(self):
        from qpknot import Family, family_for_kind, kind_for_family

        for kind in InvariantKind:
            assert kind_for_family(family_for_kind(kind)) is kind

    def test_extra_families_have_no_kind(self):
        from qpknot import Family, kind_for_family

        for fam in (Family.H1, Family.H2, Family.BMQ):
            with pytest.raises(ValueError):
                kind_for_family(fam)


class TestSeriesObject:
    def test_indices_and_getitem(self):
        s = knot_series(A, 3)
        assert s.indices() == [1, 3, 5, 7]
        assert s[3] == s.knot(1)
        assert s.indexing == "knot"

    def test_json_roundtrip(self):
        for s in (knot_series(H, 5), link_series(V, 6), link_series(H, 5)):
            again = InvariantSeries.from_json_dict(s.to_json_dict())
            assert again.kind == s.kind
            assert again.indexing == s.indexing
            assert dict(again.entries) == dict(s.entries)

    def test_json_shape(self):
        obj = knot_series(A, 1).to_json_dict()
        assert obj["kind"] == "alexander"
        assert obj["indexing"] == "knot"
        assert [e["n"] for e in obj["entries"]] == [1, 3]
