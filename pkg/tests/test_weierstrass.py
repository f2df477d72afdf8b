"""Tests for binary-form arithmetic and Weierstrass-surface analysis."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy

from dp1alpha.weierstrass import (
    BinaryForm,
    NotASectionError,
    SectionPair,
    WeierstrassSurface,
    alpha_of_surface,
    distinct_root_count,
    find_square_sections,
    format_form,
    has_cuspidal_member,
    is_smooth,
    parse_form,
    resultant,
    section_pair,
)

X4 = BinaryForm(4, (1, 0, 0, 0, 0))
Y6 = BinaryForm(6, (0, 0, 0, 0, 0, 0, 1))
ZERO4 = BinaryForm(4, (0,) * 5)
ZERO2 = BinaryForm(2, (0, 0, 0))
Y3 = BinaryForm(3, (0, 0, 0, 1))
MAIN = WeierstrassSurface(a=X4, b=Y6)

_U = sympy.Symbol("u")


def _to_sympy(form: BinaryForm) -> sympy.Poly:
    expr = sum(
        sympy.Rational(c) * _U ** (form.degree - i) for i, c in enumerate(form.coeffs)
    )
    return sympy.Poly(expr, _U)


def _random_form(rng: random.Random, degree: int, low=-3, high=3) -> BinaryForm:
    return BinaryForm(degree, [Fraction(rng.randint(low, high)) for _ in range(degree + 1)])


class TestFormArithmetic:
    def test_ring_laws_against_sympy(self):
        rng = random.Random(5)
        for _ in range(25):
            f = _random_form(rng, rng.randint(1, 4))
            g = _random_form(rng, rng.randint(1, 4))
            product = f * g
            assert _to_sympy(product) == _to_sympy(f) * _to_sympy(g)
            cube = f**3
            assert _to_sympy(cube) == _to_sympy(f) ** 3

    def test_add_requires_same_degree(self):
        with pytest.raises(ValueError):
            X4 + Y6  # noqa: B018

    def test_substitution_is_a_ring_map(self):
        rng = random.Random(6)
        m = (Fraction(2), Fraction(1), Fraction(1), Fraction(1))
        for _ in range(10):
            f = _random_form(rng, 3)
            g = _random_form(rng, 2)
            assert (f * g).substituted(*m) == f.substituted(*m) * g.substituted(*m)

    def test_parse_format_round_trip(self):
        text = "4:1,0,-2/3,0,5"
        assert format_form(parse_form(text)) == text
        with pytest.raises(ValueError):
            parse_form("4:1,2,3")
        with pytest.raises(ValueError):
            parse_form("1,2,3")

    def test_constructor_arity(self):
        with pytest.raises(ValueError):
            BinaryForm(2, (1, 2))


class TestResultant:
    def test_disjoint_root_sets(self):
        assert resultant(X4, Y6) == 1  # value pinned by the sympy oracle below

    def test_shared_factor_vanishes(self):
        x = BinaryForm(1, (1, 0))
        f = x * BinaryForm(2, (1, 0, 1))
        g = x * BinaryForm(1, (1, 1))
        assert resultant(f, g) == 0

    def test_against_sympy_on_nondegenerate_forms(self):
        # sympy's subresultant-based value can differ in sign from the
        # Sylvester determinant, so compare magnitudes here (the sign
        # convention is pinned by the product-formula test below)
        rng = random.Random(7)
        for _ in range(30):
            f = _random_form(rng, rng.randint(1, 4))
            g = _random_form(rng, rng.randint(1, 4))
            if f.coeffs[0] == 0 or g.coeffs[0] == 0:
                continue  # no roots at [1:0]: formal and affine resultants agree
            expected = sympy.resultant(_to_sympy(f).as_expr(), _to_sympy(g).as_expr(), _U)
            assert abs(resultant(f, g)) == abs(Fraction(str(expected)))

    def test_product_formula_with_rational_roots(self):
        # Res(f, g) = lc(f)^deg(g) * prod over roots r of f of g(r),
        # computed exactly when f splits into rational linear factors
        rng = random.Random(13)
        for _ in range(30):
            lead = Fraction(rng.choice([m for m in range(-3, 4) if m]))
            roots = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
            f = BinaryForm(0, (lead,))
            for r in roots:
                f = f * BinaryForm(1, (1, -r))
            g = _random_form(rng, rng.randint(1, 4))
            if g.coeffs[0] == 0:
                continue
            g_poly, _ = g.finite_part()
            def eval_g(x):
                return sum(c * x**i for i, c in enumerate(g_poly))
            expected = lead ** g.degree
            for r in roots:
                expected *= eval_g(r)
            assert resultant(f, g) == expected

    def test_zero_iff_shared_projective_root(self):
        rng = random.Random(8)
        for _ in range(60):
            f = _random_form(rng, rng.randint(1, 3), -2, 2)
            g = _random_form(rng, rng.randint(1, 3), -2, 2)
            if f.is_zero() or g.is_zero():
                continue
            shared_finite = sympy.degree(
                sympy.gcd(_to_sympy(f).as_expr(), _to_sympy(g).as_expr()), _U
            ) >= 1
            shared_infinity = f.coeffs[0] == 0 and g.coeffs[0] == 0
            assert (resultant(f, g) == 0) == (shared_finite or shared_infinity)


class TestRootCounting:
    def test_spec_values(self):
        assert distinct_root_count(Y3) == 1
        assert distinct_root_count(BinaryForm(3, (0, 0, 1, 0))) == 2
        assert distinct_root_count(BinaryForm(3, (0, 1, 1, 0))) == 3

    def test_rejects_zero_form(self):
        with pytest.raises(ValueError):
            distinct_root_count(BinaryForm(3, (0, 0, 0, 0)))

    def test_against_sympy(self):
        rng = random.Random(9)
        for _ in range(40):
            f = _random_form(rng, rng.randint(1, 6), -2, 2)
            if f.is_zero():
                continue
            poly = _to_sympy(f)
            finite = sum(1 for _root, _m in sympy.roots(poly, multiple=False).items())
            # count all distinct complex roots: degree of the squarefree part
            sqf = sympy.prod([p for p, _ in sympy.sqf_list(poly.as_expr())[1]])
            finite = sympy.degree(sqf, _U) if sqf != 1 else 0
            infinity = 1 if f.coeffs[0] == 0 else 0
            assert distinct_root_count(f) == finite + infinity

    def test_squarefree_part_law(self):
        # squarefree_part(f^2 h) has the same roots as squarefree_part(f h)
        from dp1alpha.weierstrass import _squarefree

        rng = random.Random(10)
        for _ in range(20):
            f = _random_form(rng, 2, -2, 2)
            h = _random_form(rng, 2, -2, 2)
            if f.is_zero() or h.is_zero():
                continue
            ff = f * f * h
            fh = f * h
            if ff.is_zero():
                continue
            p1, _ = ff.finite_part()
            p2, _ = fh.finite_part()
            s1, s2 = _squarefree(p1), _squarefree(p2)
            monic = lambda p: tuple(c / p[-1] for c in p)
            assert monic(s1) == monic(s2)


class TestSmoothness:
    def test_spec_examples(self):
        assert is_smooth(MAIN)
        assert is_smooth(WeierstrassSurface(a=ZERO4, b=BinaryForm(6, (1, 1, 0, 0, 0, 0, 1))))
        assert not is_smooth(WeierstrassSurface(a=ZERO4, b=BinaryForm(6, (0, 0, 1, 0, 0, 0, 0))))

    def test_main_discriminant_is_squarefree(self):
        delta = MAIN.discriminant()
        assert delta == BinaryForm(12, (4,) + (0,) * 12) + BinaryForm(
            12, (0,) * 12 + (27,)
        )
        poly, m_inf = delta.finite_part()
        assert m_inf == 0
        assert sympy.degree(sympy.gcd(_to_sympy_poly(poly), _to_sympy_poly_diff(poly)), _U) == 0

    def test_zero_b_is_singular(self):
        assert not is_smooth(WeierstrassSurface(a=X4, b=BinaryForm(6, (0,) * 7)))

    def test_rejects_identically_zero_discriminant(self):
        with pytest.raises(ValueError):
            WeierstrassSurface(a=ZERO4, b=BinaryForm(6, (0,) * 7))

    def test_invariance_under_unimodular_substitution(self):
        rng = random.Random(11)
        surfaces = [
            MAIN,
            WeierstrassSurface(a=ZERO4, b=BinaryForm(6, (1, 1, 0, 0, 0, 0, 1))),
            WeierstrassSurface(a=ZERO4, b=BinaryForm(6, (0, 0, 1, 0, 0, 0, 0))),
            WeierstrassSurface(a=X4, b=BinaryForm(6, (0, 0, 0, 0, 0, 1, 0))),
        ]
        for _ in range(12):
            # random unimodular matrix from shears and swaps
            m = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
            for _ in range(3):
                k = Fraction(rng.randint(-2, 2))
                if rng.random() < 0.5:
                    m = ((m[0][0] + k * m[1][0], m[0][1] + k * m[1][1]), m[1])
                else:
                    m = (m[0], (m[1][0] + k * m[0][0], m[1][1] + k * m[0][1]))
            flat = (m[0][0], m[0][1], m[1][0], m[1][1])
            for s in surfaces:
                image = WeierstrassSurface(
                    a=s.a.substituted(*flat), b=s.b.substituted(*flat)
                )
                assert is_smooth(image) == is_smooth(s)


def _to_sympy_poly(coeffs):
    return sum(sympy.Rational(c) * _U**i for i, c in enumerate(coeffs))


def _to_sympy_poly_diff(coeffs):
    return sympy.diff(_to_sympy_poly(coeffs), _U)


class TestCuspDetection:
    def test_main_surface_is_cusp_free(self):
        assert not has_cuspidal_member(MAIN)
        assert alpha_of_surface(MAIN) == 1

    def test_shared_root_gives_cusp(self):
        s = WeierstrassSurface(a=X4, b=BinaryForm(6, (0, 0, 0, 0, 0, 1, 0)))
        assert is_smooth(s)
        assert has_cuspidal_member(s)
        assert alpha_of_surface(s) == Fraction(5, 6)

    def test_zero_a_family_is_cuspidal(self):
        # with a = 0 every root of b gives the fiber w^2 = z^3
        s = WeierstrassSurface(a=ZERO4, b=BinaryForm(6, (1, 1, 0, 0, 0, 0, 1)))
        assert has_cuspidal_member(s)
        assert alpha_of_surface(s) == Fraction(5, 6)

    def test_triple_root_oracle(self):
        # brute-force check on the pencil z^3 + a(t)z + b(t) over sample roots:
        # cusp parameters are exactly the common roots of a and b
        t = sympy.Symbol("t")
        for surface, expected in [
            (MAIN, False),
            (WeierstrassSurface(a=X4, b=BinaryForm(6, (0, 0, 0, 0, 0, 1, 0))), True),
        ]:
            a_poly = sum(sympy.Rational(c) * t ** (4 - i) for i, c in enumerate(surface.a.coeffs))
            b_poly = sum(sympy.Rational(c) * t ** (6 - i) for i, c in enumerate(surface.b.coeffs))
            system_has_common = sympy.resultant(a_poly, b_poly, t) == 0
            at_infinity = surface.a.coeffs[0] == 0 and surface.b.coeffs[0] == 0
            assert has_cuspidal_member(surface) == (system_has_common or at_infinity)

    def test_rejects_singular_surface(self):
        singular = WeierstrassSurface(a=ZERO4, b=BinaryForm(6, (0, 0, 1, 0, 0, 0, 0)))
        with pytest.raises(ValueError):
            has_cuspidal_member(singular)


class TestSections:
    def test_main_pair(self):
        pair = section_pair(MAIN, ZERO2, Y3)
        assert pair.n_intersections == 1
        assert pair.q == ZERO2

    def test_rejects_non_section(self):
        with pytest.raises(NotASectionError):
            section_pair(MAIN, ZERO2, BinaryForm(3, (0, 0, 1, 0)))

    def test_rejects_bad_degrees(self):
        with pytest.raises(ValueError):
            section_pair(MAIN, BinaryForm(3, (0, 0, 0, 1)), Y3)
        with pytest.raises(ValueError):
            section_pair(MAIN, ZERO2, BinaryForm(2, (0, 0, 1)))

    def test_multiplicities_sum_to_three(self):
        for g in [Y3, BinaryForm(3, (0, 1, 1, 0)), BinaryForm(3, (1, 0, 0, 0))]:
            b = g * g
            surface = WeierstrassSurface(a=X4, b=b)
            pair = section_pair(surface, ZERO2, g)
            poly = _to_sympy(g)
            finite_mults = [m for _r, m in sympy.roots(poly, multiple=False).items()]
            infinity_mult = 3 - sympy.degree(poly, _U)
            total = sum(finite_mults) + infinity_mult
            assert total == 3
            distinct = len(finite_mults) + (1 if infinity_mult > 0 else 0)
            assert pair.n_intersections == distinct

    def test_nonzero_q_section(self):
        # build a valid pair with q = x^2: g^2 = q^3 + a*q + b defines b
        q = BinaryForm(2, (1, 0, 0))
        g = BinaryForm(3, (1, 0, 0, 1))  # x^3 + y^3
        a = X4
        b = g * g - (q**3 + a * q)
        surface = WeierstrassSurface(a=a, b=b)
        pair = section_pair(surface, q, g)
        assert pair.n_intersections == 3


class TestSquareSections:
    def test_main_surface(self):
        pairs = find_square_sections(MAIN)
        assert len(pairs) == 1
        assert pairs[0].g == Y3
        assert pairs[0].n_intersections == 1

    def test_three_point_example(self):
        g = BinaryForm(3, (0, 1, 1, 0))
        surface = WeierstrassSurface(a=X4, b=g * g)
        pairs = find_square_sections(surface)
        assert len(pairs) == 1
        assert pairs[0].g == g
        assert pairs[0].n_intersections == 3

    def test_non_square_b(self):
        surface = WeierstrassSurface(a=X4, b=BinaryForm(6, (0, 0, 1, 0, 0, 0, 1)))
        assert find_square_sections(surface) == []

    def test_sign_normalization(self):
        g = BinaryForm(3, (-1, 0, 0, -2))
        surface = WeierstrassSurface(a=X4, b=g * g)
        pairs = find_square_sections(surface)
        assert len(pairs) == 1
        assert pairs[0].g == BinaryForm(3, (1, 0, 0, 2))

    def test_random_squares_found(self):
        rng = random.Random(12)
        for _ in range(20):
            g = _random_form(rng, 3)
            if g.is_zero():
                continue
            b = g * g
            if (4 * X4**3 + 27 * b * b * 0 + 27 * b**2).is_zero():
                continue
            surface = WeierstrassSurface(a=X4, b=b)
            pairs = find_square_sections(surface)
            assert len(pairs) == 1
            assert pairs[0].g * pairs[0].g == b


class TestEndToEnd:
    def test_main_surface_facts(self):
        # the four facts used before applying the main theorem
        assert is_smooth(MAIN)
        assert not has_cuspidal_member(MAIN)
        assert alpha_of_surface(MAIN) == 1
        pairs = find_square_sections(MAIN)
        assert len(pairs) == 1 and pairs[0].n_intersections == 1
