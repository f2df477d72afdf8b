"""Exact cone computations in the Picard lattice of a degree-one del Pezzo surface.

Ampleness and pseudo-effectivity tests, the threshold mu at which K + t*A
meets the effective-cone boundary, minimal faces of the curve cone, and the
classification of an ample class into the P2 / F1 / P1xP1 shape with its
coefficient data (a_i, delta, s_A).  Everything runs in exact rational
arithmetic; every cone-membership answer is certified by a primal solution
or a Farkas witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linprog import INFEASIBLE, OPTIMAL, LPProblem, LPResult, solve
from .picard import (
    PicardClass,
    canonical_class,
    enumerate_conic_classes,
    enumerate_minus_one_classes,
    format_class,
    pairing,
)

P2 = "P2"
F1 = "F1"
P1XP1 = "P1xP1"


class UnclassifiableError(Exception):
    """No valid decomposition of K + mu*A was found (internal-consistency failure)."""


@dataclass(frozen=True)
class PolarizationProfile:
    """Shape data of an ample class A.

    ``K + mu*A = sum(a[i] * basis[i]) + delta * conic`` holds exactly, with
    the basis classes pairwise orthogonal (and orthogonal to the conic when
    one is present).  ``a`` is sorted descending, has length 8 for P2 and 7
    otherwise, and ``s_A`` is the sum of all but the leading coefficient.
    """

    type_tag: str
    mu: Fraction
    a: tuple[Fraction, ...]
    delta: Fraction
    s_A: Fraction
    face_generators: frozenset[PicardClass]
    basis: tuple[PicardClass, ...]
    conic: PicardClass | None


@lru_cache(maxsize=None)
def _curve_rows_int() -> tuple[tuple[int, ...], ...]:
    members = enumerate_minus_one_classes().members
    return tuple(tuple(int(c) for c in curve.coeffs) for curve in members)


def _scaled_int_coeffs(v: PicardClass) -> tuple[int, ...]:
    # Clearing denominators preserves every pairing sign.
    denom = 1
    for c in v.coeffs:
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    return tuple(int(c * denom) for c in v.coeffs)


def is_ample(v: PicardClass) -> bool:
    """True iff v has positive square and pairs positively with -K and all (-1)-classes."""
    w = _scaled_int_coeffs(v)
    if w[0] * w[0] - sum(x * x for x in w[1:]) <= 0:
        return False
    if 3 * w[0] + sum(w[1:]) <= 0:  # pairing with -K = (3, -1, ..., -1)
        return False
    return all(
        w[0] * row[0] - sum(a * b for a, b in zip(w[1:], row[1:])) > 0
        for row in _curve_rows_int()
    )


def membership_certificate(v: PicardClass) -> LPResult:
    """Solve v = sum(c_E * E) with c_E >= 0 over the 240 (-1)-classes.

    An optimal result carries the coefficients (in enumeration order); an
    infeasible one carries an exact Farkas certificate y with y.E <= 0 for
    every generator and y.v > 0.
    """
    curves = enumerate_minus_one_classes().members
    rows = tuple(
        tuple(curve.coeffs[i] for curve in curves) for i in range(9)
    )
    problem = LPProblem(
        objective=tuple(Fraction(0) for _ in curves),
        rows=rows,
        rhs=tuple(v.coeffs),
        nonneg=tuple(True for _ in curves),
    )
    return solve(problem)


def is_pseudoeffective(v: PicardClass) -> bool:
    """True iff v is a nonnegative rational combination of (-1)-classes."""
    return membership_certificate(v).status == OPTIMAL


def mu_threshold(A: PicardClass) -> Fraction:
    """Least t > 0 with K + t*A effective, as a single exact LP over (c, t)."""
    if not is_ample(A):
        raise ValueError("mu_threshold requires an ample class")
    curves = enumerate_minus_one_classes().members
    k = canonical_class()
    n = len(curves)
    # coordinates of: sum(c_E * E) - t*A = K
    rows = tuple(
        tuple(curve.coeffs[i] for curve in curves) + (-A.coeffs[i],)
        for i in range(9)
    )
    problem = LPProblem(
        objective=tuple(Fraction(0) for _ in curves) + (Fraction(1),),
        rows=rows,
        rhs=tuple(k.coeffs),
        nonneg=tuple(True for _ in range(n + 1)),
    )
    result = solve(problem)
    if result.status != OPTIMAL:
        raise UnclassifiableError(
            f"threshold LP ended {result.status} for A = {format_class(A)}"
        )
    mu = result.objective_value
    if mu <= 0:
        raise UnclassifiableError("threshold came out nonpositive for an ample class")
    return mu


def _face_of(x: PicardClass) -> frozenset[PicardClass]:
    """Minimal-face generators of a class already known to be effective.

    Aggregate scheme: repeatedly maximize the total coefficient mass on the
    still-undecided generators.  A zero optimum proves every undecided
    generator is absent from all representations; a positive one exhibits at
    least one new face member.  Equivalent to maximizing each c_E separately,
    in far fewer solves (the mass is capped by x.(-K)).
    """
    curves = enumerate_minus_one_classes().members
    n = len(curves)
    rows = tuple(
        tuple(curve.coeffs[i] for curve in curves) for i in range(9)
    )
    rhs = tuple(x.coeffs)
    nonneg = tuple(True for _ in range(n))
    undecided = set(range(n))
    face: set[int] = set()
    while undecided:
        objective = tuple(
            Fraction(-1) if j in undecided else Fraction(0) for j in range(n)
        )
        result = solve(LPProblem(objective, rows, rhs, nonneg))
        if result.status != OPTIMAL:
            raise UnclassifiableError("face LP lost feasibility mid-scan")
        if result.objective_value == 0:
            break
        newly = {j for j in undecided if result.point[j] > 0}
        if not newly:
            raise AssertionError("positive aggregate mass with no positive entry")
        face |= newly
        undecided -= newly
    return frozenset(curves[j] for j in face)


def minimal_face(x: PicardClass) -> frozenset[PicardClass]:
    """Generators of the smallest cone face containing x; rejects non-effective x."""
    if not is_pseudoeffective(x):
        raise ValueError("minimal_face requires a pseudo-effective class")
    return _face_of(x)


def minimal_face_by_generator(x: PicardClass) -> frozenset[PicardClass]:
    """Reference implementation: one coefficient-maximizing LP per generator."""
    if not is_pseudoeffective(x):
        raise ValueError("minimal_face requires a pseudo-effective class")
    curves = enumerate_minus_one_classes().members
    n = len(curves)
    rows = tuple(
        tuple(curve.coeffs[i] for curve in curves) for i in range(9)
    )
    rhs = tuple(x.coeffs)
    nonneg = tuple(True for _ in range(n))
    face = []
    for j in range(n):
        objective = tuple(
            Fraction(-1) if i == j else Fraction(0) for i in range(n)
        )
        result = solve(LPProblem(objective, rows, rhs, nonneg))
        if result.status != OPTIMAL:
            raise UnclassifiableError("face LP lost feasibility mid-scan")
        if result.objective_value < 0:
            face.append(curves[j])
    return frozenset(face)


def _extend_to_disjoint_eight(
    chosen: list[PicardClass],
) -> list[PicardClass] | None:
    """Extend pairwise-orthogonal (-1)-classes to 8, lex-smallest, by backtracking."""
    curves = enumerate_minus_one_classes().members

    def rec(current: list[PicardClass], start: int) -> list[PicardClass] | None:
        if len(current) == 8:
            return current
        for idx in range(start, len(curves)):
            candidate = curves[idx]
            if all(pairing(candidate, c) == 0 for c in current):
                found = rec(current + [candidate], idx + 1)
                if found is not None:
                    return found
        return None

    return rec(list(chosen), 0)


def _integer_kernel_basis(constraints: list[PicardClass]) -> list[tuple[int, ...]]:
    """Z-basis of { v integral : v . E = 0 for all E in constraints }.

    Column reduction over the integers with unimodular operations, so the
    result is a basis of the full kernel lattice, not a finite-index
    sublattice (that distinction matters for the parity test).
    """
    signs = (1,) + (-1,) * 8
    rows = [
        [int(s * c) for s, c in zip(signs, e.coeffs)] for e in constraints
    ]
    ncols = 9
    mat = [list(row) for row in rows]
    unimod = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def col_addmul(dst: int, src: int, q: int) -> None:
        for r in range(len(mat)):
            mat[r][dst] += q * mat[r][src]
        for r in range(ncols):
            unimod[r][dst] += q * unimod[r][src]

    def col_swap(i: int, j: int) -> None:
        for r in range(len(mat)):
            mat[r][i], mat[r][j] = mat[r][j], mat[r][i]
        for r in range(ncols):
            unimod[r][i], unimod[r][j] = unimod[r][j], unimod[r][i]

    pivot_col = 0
    for r in range(len(mat)):
        active = [c for c in range(pivot_col, ncols) if mat[r][c] != 0]
        if not active:
            continue
        # Euclidean reduction across the active columns of this row
        while True:
            active = [c for c in range(pivot_col, ncols) if mat[r][c] != 0]
            if len(active) <= 1:
                break
            active.sort(key=lambda c: abs(mat[r][c]))
            small = active[0]
            for other in active[1:]:
                col_addmul(other, small, -(mat[r][other] // mat[r][small]))
        remaining = next(c for c in range(pivot_col, ncols) if mat[r][c] != 0)
        col_swap(pivot_col, remaining)
        pivot_col += 1

    kernel = [
        tuple(unimod[r][c] for r in range(ncols)) for c in range(pivot_col, ncols)
    ]
    for vec in kernel:  # exactness check against the original constraints
        for row in rows:
            if sum(a * b for a, b in zip(row, vec)) != 0:
                raise AssertionError("kernel computation produced a non-solution")
    return kernel


def _complement_is_even(seven: list[PicardClass]) -> bool:
    """Parity of the rank-2 lattice orthogonal to seven disjoint (-1)-classes."""
    kernel = _integer_kernel_basis(seven)
    if len(kernel) != 2:
        raise UnclassifiableError(
            f"orthogonal complement has rank {len(kernel)}, expected 2"
        )
    vectors = [PicardClass(v) for v in kernel]
    # a rank-2 form with integral cross terms is even iff both diagonal
    # squares are even
    return all(pairing(v, v) % 2 == 0 for v in vectors)


def _sorted_decomposition(
    coefficients: list[tuple[Fraction, PicardClass]],
) -> tuple[tuple[Fraction, ...], tuple[PicardClass, ...]]:
    ordered = sorted(coefficients, key=lambda item: (-item[0], item[1]))
    return tuple(c for c, _ in ordered), tuple(e for _, e in ordered)


def _validate_profile(profile: PolarizationProfile, A: PicardClass) -> None:
    a = profile.a
    if not a or not a[0] < 1:
        raise UnclassifiableError(f"leading coefficient {a[0] if a else '?'} not < 1")
    for left, right in zip(a, a[1:]):
        if left < right:
            raise UnclassifiableError("coefficients not sorted")
    if a[-1] < 0 or profile.delta < 0:
        raise UnclassifiableError("negative coefficient in decomposition")
    target = canonical_class() + profile.mu * A
    total = PicardClass([0] * 9)
    for coeff, e in zip(a, profile.basis):
        total = total + coeff * e
    if profile.conic is not None:
        total = total + profile.delta * profile.conic
    if total != target:
        raise UnclassifiableError("recomposition identity failed")


def classify(A: PicardClass) -> PolarizationProfile:
    """Classify an ample class as P2, F1, or P1xP1 with its coefficient data."""
    if not is_ample(A):
        raise ValueError("classify requires an ample class")
    mu = mu_threshold(A)
    boundary = canonical_class() + mu * A
    face = _face_of(boundary)
    face_list = sorted(face)

    crossing = None
    for i, left in enumerate(face_list):
        for right in face_list[i + 1 :]:
            p = pairing(left, right)
            if p == 1 and crossing is None:
                crossing = (left, right)
            elif p not in (0, 1):
                raise UnclassifiableError(
                    f"face generators pair to {p}; proper faces admit only 0 or 1"
                )

    if crossing is None:
        profile = _classify_orthogonal(A, mu, boundary, face, face_list)
    else:
        profile = _classify_conic_bundle(A, mu, boundary, face, face_list, crossing)
    _validate_profile(profile, A)
    return profile


def _classify_orthogonal(
    A: PicardClass,
    mu: Fraction,
    boundary: PicardClass,
    face: frozenset[PicardClass],
    face_list: list[PicardClass],
) -> PolarizationProfile:
    coefficients = []
    recomposed = PicardClass([0] * 9)
    for e in face_list:
        coeff = -pairing(boundary, e)
        if coeff <= 0:
            raise UnclassifiableError(
                f"face generator {format_class(e)} carries coefficient {coeff}"
            )
        coefficients.append((coeff, e))
        recomposed = recomposed + coeff * e
    if recomposed != boundary:
        raise UnclassifiableError(
            "orthogonal face does not span the boundary class"
        )

    extended = _extend_to_disjoint_eight(face_list)
    if extended is not None:
        for e in extended:
            if e not in face:
                coefficients.append((Fraction(0), e))
        a, basis = _sorted_decomposition(coefficients)
        return PolarizationProfile(
            type_tag=P2,
            mu=mu,
            a=a,
            delta=Fraction(0),
            s_A=sum(a[1:], Fraction(0)),
            face_generators=face,
            basis=basis,
            conic=None,
        )

    if len(face_list) != 7:
        raise UnclassifiableError(
            f"{len(face_list)} disjoint face generators admit no disjoint eighth"
        )
    if not _complement_is_even(face_list):
        raise UnclassifiableError(
            "seven-generator face with odd complement should extend to eight"
        )
    conic = next(
        (c for c in enumerate_conic_classes() if all(pairing(c, e) == 0 for e in face_list)),
        None,
    )
    if conic is None:
        raise UnclassifiableError("no conic class orthogonal to the seven generators")
    a, basis = _sorted_decomposition(coefficients)
    return PolarizationProfile(
        type_tag=P1XP1,
        mu=mu,
        a=a,
        delta=Fraction(0),
        s_A=sum(a[1:], Fraction(0)),
        face_generators=face,
        basis=basis,
        conic=conic,
    )


def _classify_conic_bundle(
    A: PicardClass,
    mu: Fraction,
    boundary: PicardClass,
    face: frozenset[PicardClass],
    face_list: list[PicardClass],
    crossing: tuple[PicardClass, PicardClass],
) -> PolarizationProfile:
    conic = crossing[0] + crossing[1]
    if pairing(boundary, conic) != 0:
        raise UnclassifiableError("boundary class is not orthogonal to the fiber class")
    for e in face_list:
        if pairing(e, conic) != 0:
            raise UnclassifiableError(
                f"face generator {format_class(e)} is not vertical for the fiber class"
            )

    curves = enumerate_minus_one_classes()
    members = set(curves.members)
    pairs: list[tuple[PicardClass, PicardClass]] = []
    for p in curves:
        if pairing(p, conic) != 0:
            continue
        q = conic - p
        if q in members and p < q:
            pairs.append((p, q))
    if len(pairs) != 7:
        raise UnclassifiableError(
            f"fiber class has {len(pairs)} reducible members, expected 7"
        )
    components = {p for pair in pairs for p in pair}
    for e in face_list:
        if e not in components:
            raise UnclassifiableError(
                f"face generator {format_class(e)} is not a fiber component"
            )

    chosen: list[tuple[Fraction, PicardClass]] = []
    for p, q in pairs:
        against_p = pairing(boundary, p)  # pairing with q is the negative of this
        if against_p > 0:
            pick = q
        else:
            pick = p  # strictly negative, or a zero-zero tie broken to the lex-smaller
        chosen.append((-pairing(boundary, pick), pick))

    selected = [e for _, e in chosen]
    for i, left in enumerate(selected):
        for right in selected[i + 1 :]:
            if pairing(left, right) != 0:
                raise UnclassifiableError("chosen fiber components are not disjoint")

    residual = boundary
    for coeff, e in chosen:
        residual = residual - coeff * e
    delta = -pairing(residual, canonical_class()) / 2
    if delta < 0 or residual != delta * conic:
        raise UnclassifiableError("residual is not a nonnegative multiple of the fiber class")

    has_section = any(
        all(pairing(w, e) == 0 for e in selected) for w in curves
    )
    if has_section == _complement_is_even(selected):
        raise UnclassifiableError("section search disagrees with the lattice parity test")

    a, basis = _sorted_decomposition(chosen)
    return PolarizationProfile(
        type_tag=F1 if has_section else P1XP1,
        mu=mu,
        a=a,
        delta=delta,
        s_A=sum(a[1:], Fraction(0)),
        face_generators=face,
        basis=basis,
        conic=conic,
    )
