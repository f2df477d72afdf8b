"""Tests for the cone engine: ampleness, effectivity, mu, faces, classification."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from dp1alpha.cone import (
    F1,
    P1XP1,
    P2,
    PolarizationProfile,
    UnclassifiableError,
    classify,
    is_ample,
    is_pseudoeffective,
    membership_certificate,
    minimal_face,
    minimal_face_by_generator,
    mu_threshold,
)
from dp1alpha.linprog import INFEASIBLE, OPTIMAL
from dp1alpha.picard import (
    PicardClass,
    canonical_class,
    enumerate_conic_classes,
    enumerate_minus_one_classes,
    exceptional_class,
    hyperplane_class,
    pairing,
)

K = canonical_class()
H = hyperplane_class()
E = exceptional_class
ZERO = PicardClass([0] * 9)
LEX_FIRST = sorted(enumerate_minus_one_classes().members)[0]


class TestAmpleness:
    def test_anticanonical_is_ample(self):
        assert is_ample(-K)

    def test_exceptional_is_not(self):
        assert not is_ample(E(1))

    def test_anticanonical_plus_curve_window(self):
        c = LEX_FIRST
        for lam, expected in [
            (Fraction(-1, 3), False),
            (Fraction(1), False),
            (Fraction(0), True),
            (Fraction(1, 3), True),
            (Fraction(9, 10), True),
        ]:
            assert is_ample(-K + lam * c) is expected, lam

    def test_window_boundaries_from_pairings(self):
        # the window above is cut out by pairings with the 240 classes:
        # the binding constraints are attained, so endpoints are not ample
        c = LEX_FIRST
        assert not is_ample(-K + Fraction(-1, 3) * c)
        assert not is_ample(-K + 1 * c)


class TestPseudoEffectivity:
    def test_generators_are_effective(self):
        for curve in enumerate_minus_one_classes().members[::40]:
            assert is_pseudoeffective(curve)

    def test_apex(self):
        assert is_pseudoeffective(ZERO)

    def test_negative_exceptional_is_not(self):
        assert not is_pseudoeffective(-E(1))

    def test_certificates_are_exact(self):
        curves = enumerate_minus_one_classes().members
        good = membership_certificate(Fraction(2, 3) * curves[5] + curves[17])
        assert good.status == OPTIMAL
        recomposed = ZERO
        for coeff, curve in zip(good.point, curves):
            recomposed = recomposed + coeff * curve
        assert recomposed == Fraction(2, 3) * curves[5] + curves[17]

        bad = membership_certificate(-E(1))
        assert bad.status == INFEASIBLE
        y = PicardClass(bad.farkas)  # witness lives in the dual coordinates
        for curve in curves:
            assert sum(y.coeffs[i] * curve.coeffs[i] for i in range(9)) <= 0
        assert sum(y.coeffs[i] * (-E(1)).coeffs[i] for i in range(9)) > 0

    def test_anticanonical_multiples(self):
        assert is_pseudoeffective(-K)
        assert not is_pseudoeffective(2 * K)


class TestMuThreshold:
    def test_anticanonical(self):
        assert mu_threshold(-K) == 1

    def test_scaled_anticanonical(self):
        assert mu_threshold(-2 * K) == Fraction(1, 2)

    def test_anticanonical_plus_curve(self):
        for lam in [Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)]:
            assert mu_threshold(-K + lam * LEX_FIRST) == 1

    def test_scaling_law(self):
        a = -K + Fraction(1, 3) * LEX_FIRST
        mu = mu_threshold(a)
        for c in [Fraction(2), Fraction(1, 2), Fraction(7, 3)]:
            assert mu_threshold(c * a) == mu / c

    def test_boundary_sharpness(self):
        for a in [-K, -K + Fraction(1, 2) * LEX_FIRST, -3 * K + E(1) + E(2)]:
            mu = mu_threshold(a)
            assert is_pseudoeffective(K + mu * a)
            assert not is_pseudoeffective(K + (mu * Fraction(999, 1000)) * a)

    def test_rejects_non_ample(self):
        with pytest.raises(ValueError):
            mu_threshold(E(1))


class TestMinimalFace:
    def test_single_ray(self):
        for lam in [Fraction(1, 3), Fraction(5)]:
            assert minimal_face(lam * LEX_FIRST) == frozenset({LEX_FIRST})

    def test_apex(self):
        assert minimal_face(ZERO) == frozenset()

    def test_rejects_non_effective(self):
        # 2K pairs to -2 with the ample class -K, so it cannot be effective
        with pytest.raises(ValueError):
            minimal_face(2 * K)

    def test_bertini_pair_sums_to_minus_two_k(self):
        # -2K itself *is* effective: C + (Bertini image of C) recomposes it
        from dp1alpha.picard import bertini

        assert LEX_FIRST + bertini(LEX_FIRST) == -2 * K
        assert is_pseudoeffective(-2 * K)

    def test_agrees_with_per_generator_reference(self):
        points = [
            ZERO,
            Fraction(1, 3) * LEX_FIRST,
            Fraction(1, 4) * (H - E(1)) + Fraction(1, 3) * E(2),
            E(1) + E(2) + Fraction(1, 2) * (H - E(1) - E(2)),
        ]
        for x in points:
            assert minimal_face(x) == minimal_face_by_generator(x)

    def test_conic_splits_into_all_components(self):
        # every reducible member of the pencil contributes both components
        conic = H - E(1)
        face = minimal_face(conic)
        assert len(face) == 14
        for member in face:
            assert pairing(member, conic) == 0


def _profile_checks(profile: PolarizationProfile, a_len: int) -> None:
    assert len(profile.a) == a_len
    assert profile.a[0] < 1
    assert all(x >= 0 for x in profile.a)
    assert all(l >= r for l, r in zip(profile.a, profile.a[1:]))
    assert profile.s_A == sum(profile.a[1:], Fraction(0))
    # pairwise orthogonality of the basis, and orthogonality to the conic
    for i, left in enumerate(profile.basis):
        for right in profile.basis[i + 1 :]:
            assert pairing(left, right) == 0
        if profile.conic is not None:
            assert pairing(left, profile.conic) == 0


class TestClassify:
    def test_anticanonical_degenerate(self):
        profile = classify(-K)
        assert profile.type_tag == P2
        assert profile.mu == 1
        assert profile.a == (Fraction(0),) * 8
        assert profile.delta == 0
        assert profile.s_A == 0
        assert profile.face_generators == frozenset()
        _profile_checks(profile, 8)

    def test_single_curve_polarizations(self):
        for lam in [Fraction(1, 10), Fraction(1, 2), Fraction(99, 100)]:
            profile = classify(-K + lam * LEX_FIRST)
            assert profile.type_tag == P2
            assert profile.mu == 1
            assert profile.a == (lam,) + (Fraction(0),) * 7
            assert profile.delta == 0
            assert profile.s_A == 0
            _profile_checks(profile, 8)

    def test_conic_bundle_fixture(self):
        boundary = (
            Fraction(1, 4) * (H - E(1))
            + Fraction(1, 3) * E(2)
            + Fraction(1, 5) * E(3)
        )
        profile = classify(boundary - K)
        assert profile.type_tag == F1
        assert profile.mu == 1
        assert profile.a == (
            Fraction(1, 3),
            Fraction(1, 5),
            Fraction(0),
            Fraction(0),
            Fraction(0),
            Fraction(0),
            Fraction(0),
        )
        assert profile.delta == Fraction(1, 4)
        assert profile.s_A == Fraction(1, 5)
        assert profile.conic == H - E(1)
        _profile_checks(profile, 7)

    def test_even_complement_fixture(self):
        seven = [E(i) for i in range(2, 8)] + [H - E(1) - E(8)]
        boundary = ZERO
        for i, e in enumerate(seven):
            boundary = boundary + Fraction(i + 2, 10) * e
        profile = classify(boundary - K)
        assert profile.type_tag == P1XP1
        assert profile.mu == 1
        assert profile.delta == 0
        assert sorted(profile.a, reverse=True) == list(profile.a)
        assert set(profile.basis) == set(seven)
        assert profile.conic == H - E(1)
        _profile_checks(profile, 7)

    def test_seven_with_odd_complement_is_still_p2(self):
        # {e2..e8} leaves span{H, e1}, which is odd: an eighth disjoint
        # class exists (e1) and the classification stays P2
        boundary = ZERO
        for i in range(2, 9):
            boundary = boundary + Fraction(i, 20) * E(i)
        profile = classify(boundary - K)
        assert profile.type_tag == P2
        assert E(1) in profile.basis
        _profile_checks(profile, 8)

    def test_rejects_non_ample(self):
        with pytest.raises(ValueError):
            classify(E(1))

    def test_recomposition_on_random_ample_classes(self):
        rng = random.Random(97)
        curves = enumerate_minus_one_classes().members
        for _ in range(50):
            a = (
                Fraction(rng.randint(1, 5)) * -K
                + Fraction(rng.randint(0, 10), 11) * curves[rng.randrange(240)]
                + Fraction(rng.randint(0, 10), 13) * curves[rng.randrange(240)]
            )
            if not is_ample(a):
                continue
            profile = classify(a)
            total = ZERO
            for coeff, e in zip(profile.a, profile.basis):
                total = total + coeff * e
            if profile.conic is not None:
                total = total + profile.delta * profile.conic
            assert total == K + profile.mu * a
            _profile_checks(profile, 8 if profile.type_tag == P2 else 7)

    def test_mu_scaling_leaves_profile_data_fixed(self):
        a = -K + Fraction(1, 3) * LEX_FIRST
        one = classify(a)
        two = classify(Fraction(5, 2) * a)
        assert two.mu == one.mu / Fraction(5, 2)
        assert (two.type_tag, two.a, two.delta, two.s_A) == (
            one.type_tag,
            one.a,
            one.delta,
            one.s_A,
        )


class TestComplementParity:
    def test_even_set(self):
        from dp1alpha.cone import _complement_is_even

        seven = [E(i) for i in range(2, 8)] + [H - E(1) - E(8)]
        assert _complement_is_even(seven)

    def test_odd_set(self):
        from dp1alpha.cone import _complement_is_even

        assert not _complement_is_even([E(i) for i in range(2, 9)])

    def test_parity_matches_section_search(self):
        # on a sample of disjoint 7-sets: a disjoint (-1)-class exists
        # exactly when the rank-2 complement is odd
        from dp1alpha.cone import _complement_is_even

        curves = enumerate_minus_one_classes().members
        rng = random.Random(11)
        found_even = found_odd = 0
        while found_even < 2 or found_odd < 2:
            chosen: list = []
            order = list(range(240))
            rng.shuffle(order)
            for idx in order:
                candidate = curves[idx]
                if all(pairing(candidate, c) == 0 for c in chosen):
                    chosen.append(candidate)
                    if len(chosen) == 7:
                        break
            if len(chosen) != 7:
                continue
            section = any(
                all(pairing(w, c) == 0 for c in chosen) for w in curves
            )
            even = _complement_is_even(chosen)
            assert section != even
            found_even += even
            found_odd += not even
