"""Root counting, isolation, and classification, cross-checked against an
independent computer-algebra oracle."""

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from realroots import (
    Polynomial,
    RootLocation,
    Rootedness,
    ZeroPolynomialError,
    count_roots,
    from_roots,
    is_real_rooted,
    isolate_roots,
    log_concavity_check,
    roots_in_interval,
    squarefree_part,
    sturm_chain,
    yun_decomposition,
)
from realroots.roots import INF, NEG_INF, cauchy_root_bound, simplest_between

_X = sympy.Symbol("x")


def P(*coeffs) -> Polynomial:
    return Polynomial([Fraction(c) for c in coeffs])


def to_sympy(f: Polynomial):
    return sympy.Poly(list(reversed([sympy.Rational(c) for c in f.coeffs])), _X)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=8)
small_polys = st.lists(rationals, min_size=1, max_size=7).map(Polynomial).filter(
    lambda f: not f.is_zero
)


class TestSturmChain:
    def test_quadratic_chain(self):
        chain = sturm_chain(P(-2, 0, 1))
        assert chain.polynomials[0] == P(-2, 0, 1)
        assert chain.polynomials[1] == P(0, 2)
        assert chain.polynomials[2].degree == 0
        assert chain.polynomials[2].leading > 0

    def test_linear_chain(self):
        assert [e.degree for e in sturm_chain(P(0, 1))] == [1, 0]

    def test_double_root_terminates_at_common_factor(self):
        chain = sturm_chain(P(0, 0, 1))
        last = chain.polynomials[-1]
        assert last.degree == 1 and last(0) == 0

    def test_zero_poly_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            sturm_chain(Polynomial([]))


class TestCountRoots:
    def test_sqrt_two_in_unit_window(self):
        assert count_roots(P(-2, 0, 1), 0, 2) == 1

    def test_no_real_roots(self):
        assert count_roots(P(1, 0, 1), NEG_INF, INF) == 0

    def test_closed_endpoints_handled_by_caller(self):
        f = P(0, 1, 1)
        assert count_roots(f, -1, 0) == 1  # half-open (lo, hi] sees only 0
        assert f(-1) == 0
        assert roots_in_interval(f, -1, 0, closed=True)

    def test_multiplicities_do_not_double_count(self):
        assert count_roots(P(0, 0, 1) * P(-1, 1), NEG_INF, INF) == 2

    def test_infinite_endpoints(self):
        f = from_roots([-100, 100])
        assert count_roots(f, NEG_INF, INF) == 2
        assert count_roots(f, 0, INF) == 1

    @settings(max_examples=60, deadline=None)
    @given(small_polys, rationals, rationals)
    def test_against_oracle(self, f, a, b):
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        ours = count_roots(f, lo, hi)
        roots = {r for r in sympy.Poly(to_sympy(f)).real_roots()}
        theirs = sum(1 for r in roots if r > lo and r <= hi)
        assert ours == theirs


class TestIsolation:
    def test_rational_roots_found_exactly(self):
        locs = isolate_roots(P(0, 1, 2))
        assert [(loc.point, loc.multiplicity) for loc in locs] == [
            (Fraction(-1, 2), 1),
            (Fraction(0), 1),
        ]

    def test_double_root(self):
        locs = isolate_roots(P(0, 0, 1))
        assert [(loc.point, loc.multiplicity) for loc in locs] == [(0, 2)]

    def test_irrational_roots_get_intervals(self):
        locs = isolate_roots(P(-2, 0, 1))
        assert len(locs) == 2
        for loc, sign in zip(locs, (-1, 1)):
            assert not loc.is_exact
            assert loc.lo < sign * Fraction(577, 408) < loc.hi  # near ±√2

    def test_intervals_are_disjoint_and_ordered(self):
        f = from_roots([0, Fraction(1, 3), 1]) * P(-2, 0, 1)
        locs = isolate_roots(f)
        assert len(locs) == 5
        for left, right in zip(locs, locs[1:]):
            assert left.hi < right.lo or (
                left.hi == right.lo and (left.is_exact or right.is_exact)
            )

    def test_endpoints_are_never_roots(self):
        f = P(-2, 0, 1) * from_roots([Fraction(3, 2)])
        for loc in isolate_roots(f):
            if not loc.is_exact:
                assert f(loc.lo) != 0 and f(loc.hi) != 0

    def test_zero_poly_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            isolate_roots(Polynomial([]))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(rationals, min_size=1, max_size=5), st.integers(0, 2))
    def test_multiplicity_sum_and_containment(self, roots, extra_pairs):
        f = from_roots(roots)
        for _ in range(extra_pairs):
            f = f * P(1, 0, 1)  # add non-real pairs; must not disturb isolation
        locs = isolate_roots(f)
        assert sum(loc.multiplicity for loc in locs) == len(roots)
        ours = {loc.point for loc in locs if loc.is_exact}
        assert ours == set(map(Fraction, roots))


class TestIsolationOracle:
    @settings(max_examples=30, deadline=None)
    @given(small_polys)
    def test_locations_match_computer_algebra(self, f):
        locs = isolate_roots(f)
        oracle = to_sympy(f).real_roots()
        distinct = []
        for r in oracle:
            if not distinct or sympy.simplify(distinct[-1] - r) != 0:
                distinct.append(r)
        assert len(locs) == len(distinct)
        for loc, r in zip(locs, distinct):
            if loc.is_exact:
                assert sympy.Rational(loc.point) == r
            else:
                assert sympy.Rational(loc.lo) < r < sympy.Rational(loc.hi)


class TestClassification:
    def test_examples(self):
        assert is_real_rooted(P(1, 2, 1)) is Rootedness.REAL_WITH_MULTIPLICITY
        assert is_real_rooted(P(1, 1, 1)) is Rootedness.NOT_REAL_ROOTED
        assert is_real_rooted(P(0, 1, 1)) is Rootedness.REAL_SIMPLE

    def test_constants_vacuously_simple(self):
        assert is_real_rooted(P(5)) is Rootedness.REAL_SIMPLE

    def test_interval_membership(self):
        assert roots_in_interval(P(0, 1, 2), -1, 0)
        assert not roots_in_interval(P(-1, 1), -1, 0)
        assert roots_in_interval(P(0, 1, 1), -1, 0, closed=True)
        assert not roots_in_interval(P(0, 1, 1), -1, 0, closed=False)

    def test_non_real_rooted_never_inside(self):
        assert not roots_in_interval(P(1, 0, 1) * P(0, 1), -1, 0)


class TestSquarefree:
    def test_squarefree_part_drops_multiplicity(self):
        f = from_roots([1, 1, 2])
        assert squarefree_part(f).monic() == from_roots([1, 2])

    def test_yun_reconstructs(self):
        f = from_roots([0, 0, 0, 1, 1, -2]) * 3
        rebuilt = Polynomial([3])
        for g, mult in yun_decomposition(f):
            rebuilt = rebuilt * g**mult
        assert rebuilt == f

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(-6, 6), min_size=1, max_size=6))
    def test_yun_multiplicities(self, roots):
        f = from_roots(roots)
        expected = {Fraction(r): roots.count(r) for r in set(roots)}
        got: dict[Fraction, int] = {}
        for g, mult in yun_decomposition(f):
            for loc in isolate_roots(g):
                got[loc.point] = mult
        assert got == expected


class TestLogConcavity:
    def test_strict_example(self):
        assert log_concavity_check(P(1, 4, 2)) is None

    def test_violation_index(self):
        assert log_concavity_check(P(1, 1, 1)) == 1

    def test_empty_range_vacuous(self):
        assert log_concavity_check(P(0, 1, 2)) is None


class TestHelpers:
    def test_cauchy_bound_contains_roots(self):
        f = from_roots([-7, Fraction(9, 2)])
        bound = cauchy_root_bound(f)
        assert bound > 7 and bound > Fraction(9, 2)

    def test_simplest_between_prefers_small_denominators(self):
        # open-interval semantics: the endpoints themselves never qualify
        assert simplest_between(Fraction(1, 3), Fraction(1, 2)) == Fraction(2, 5)
        assert simplest_between(Fraction(-3, 2), Fraction(-4, 3)) == Fraction(-7, 5)
        assert simplest_between(Fraction(2, 7), Fraction(3, 7)) == Fraction(1, 3)
        assert simplest_between(Fraction(-1, 2), Fraction(3)) == 0

    def test_random_simplest_between_is_minimal(self):
        rng = random.Random(5)
        for _ in range(200):
            a = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
            b = a + Fraction(rng.randint(1, 30), rng.randint(1, 12))
            got = simplest_between(a, b)
            assert a < got < b
            for den in range(1, got.denominator):
                strictly_inside = [
                    num
                    for num in range(int(a * den) - 1, int(b * den) + 2)
                    if a < Fraction(num, den) < b
                ]
                assert not strictly_inside, (a, b, got, den)
