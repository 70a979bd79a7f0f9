"""Tests for root counting and the no-zero decision."""

import random

import pytest
from src.ffelim.count.instance import BivariateInstance
from src.ffelim.count.pipeline import (
    build_g,
    count_distinct_t,
    decide_no_zero,
    exact_from_cumulative,
    moebius,
    per_degree_counts,
)
from src.ffelim.count.derivation import verify_derivation
from src.ffelim.errors import (
    ArityMismatch,
    ConditionViolated,
    DegenerateInstance,
    DegreeBoundExceeded,
    DimensionTooLarge,
    FieldTooLarge,
    NotMonicInX,
)
from src.ffelim.field.prime import PrimeModulus
from src.ffelim.oracle import brute_bivariate_roots
from src.ffelim.poly.grammar import m_parse
from src.ffelim.poly.mpoly import MultiPoly, m_eval
from src.ffelim.poly.upoly import UniPoly
from src.ffelim.types import Route

P5 = PrimeModulus(5)
P7 = PrimeModulus(7)


def inst(text: str, m: PrimeModulus = P5, strict: bool = False) -> BivariateInstance:
    return BivariateInstance(m_parse(text, 2, m), strict=strict)


def random_instance(rng: random.Random, m: PrimeModulus) -> BivariateInstance:
    n = rng.randint(1, 3)
    terms = {(0, n): 1}
    for _ in range(rng.randint(1, 4)):
        terms[(rng.randint(0, 3), rng.randint(0, n - 1))] = rng.randrange(1, m.p)
    return BivariateInstance(MultiPoly(terms, 2, m))


class TestInstance:
    def test_shape(self):
        f = inst("x1^2 + x0*x1 + x0^3 + 1")
        assert (f.p, f.n, f.m) == (5, 2, 3)
        assert f.coefficients() == [UniPoly((1, 0, 0, 1), P5), UniPoly((0, 1), P5)]
        assert f.a0_has_degree_m

    def test_leading_coefficient_is_normalized(self):
        assert inst("2*x1 + x0").f == m_parse("x1 + 3*x0", 2, P5)

    def test_rejects_bad_input(self):
        with pytest.raises(NotMonicInX):
            inst("x0*x1 + 1")
        with pytest.raises(NotMonicInX):
            inst("x0^2 + 1")
        with pytest.raises(ArityMismatch):
            BivariateInstance(m_parse("x1 + x2", 3, P5))

    def test_strict_conventions(self):
        with pytest.raises(ConditionViolated):
            inst("x1^2 + x0", strict=True)
        with pytest.raises(ConditionViolated):
            inst("x1^2 + x0*x1 + x0", strict=True)
        assert inst("x1^2 + x1 + x0^2", strict=True).m == 2


class TestCounting:
    @pytest.mark.parametrize(
        "text, m, expected",
        [
            ("x1^2 - x0", P5, 3),
            ("x1 - x0", P5, 5),
            ("x1^2 - x0", P7, 4),
        ],
    )
    def test_distinct_t(self, text, m, expected):
        assert count_distinct_t(inst(text, m)).distinct_t == expected

    def test_square_roots_over_gf5(self):
        report = per_degree_counts(inst("x1^2 - x0"), 1)
        assert report.cumulative == {1: 3}
        assert report.exact == {1: 3}
        assert report.squarefree == UniPoly((0, 4, 0, 1), P5)
        assert report.to_dict()["cumulative"] == {"1": 3}

    def test_quadratic_image_over_gf25(self):
        report = per_degree_counts(inst("x1 - (x0^2 - 2)"), 2)
        assert report.cumulative == {1: 5, 2: 9}
        assert report.exact == {1: 5, 2: 4}
        assert report.distinct_t == 9

    def test_exact_degree_one_equals_cumulative(self):
        rng = random.Random(50)
        for _ in range(20):
            try:
                report = per_degree_counts(random_instance(rng, P7), 1)
            except DegenerateInstance:
                continue
            assert report.exact[1] == report.cumulative[1]

    def test_matches_brute_force(self):
        rng = random.Random(51)
        for m in (PrimeModulus(3), P5):
            for _ in range(15):
                f = random_instance(rng, m)
                dmax = min(max(f.m, 1), 2)
                try:
                    report = per_degree_counts(f, dmax)
                except DegenerateInstance:
                    continue
                brute = brute_bivariate_roots(f.f, dmax)
                assert report.cumulative == brute.cumulative
                assert report.exact == brute.exact

    def test_routes_agree(self):
        rng = random.Random(52)
        for m in (P5, P7):
            for _ in range(6):
                f = random_instance(rng, m)
                product = _g_or_none(f, Route.PRODUCT)
                assert product == _g_or_none(f, Route.SYLVESTER)

    def test_transcript_is_verifiable(self):
        report = per_degree_counts(inst("x1^2 - x0"), 1, transcript=True)
        assert report.transcript is not None
        assert verify_derivation(report.transcript).ok
        payload = report.to_dict()
        assert payload["transcript_len"] == len(report.transcript.steps)
        assert payload["schema"] == "1"

    def test_degenerate_instance(self):
        with pytest.raises(DegenerateInstance):
            count_distinct_t(inst("x1^2 + x0*x1"))

    def test_guards(self):
        with pytest.raises(DegreeBoundExceeded):
            per_degree_counts(inst("x1 - (x0^2 - 2)"), 3)
        with pytest.raises(DegreeBoundExceeded):
            per_degree_counts(inst("x1^2 - x0"), 0)
        with pytest.raises(DimensionTooLarge):
            build_g(inst("x1^2 - x0", PrimeModulus(31)), Route.SYLVESTER)
        with pytest.raises(FieldTooLarge):
            build_g(inst("x1 - x0", PrimeModulus(1031)), Route.PRODUCT)
        assert not build_g(
            inst("x1 - x0", PrimeModulus(1031)), Route.PRODUCT, product_route_max_p=2000
        ).is_zero()


def _g_or_none(f: BivariateInstance, route: Route):
    try:
        return build_g(f, route)
    except DegenerateInstance:
        return None


class TestDecision:
    def test_square_has_zero(self):
        report = decide_no_zero(inst("x1^2 - x0"))
        assert report.no_zero is False
        assert report.transcript is not None and verify_derivation(report.transcript).ok

    def test_nonresidue_shift_has_no_zero(self):
        report = decide_no_zero(inst("x1^2 + x1 + 1 + x0^5 - x0"))
        assert report.no_zero is True
        assert report.to_dict()["gcd"] == "1"

    def test_degenerate_g_has_zero(self):
        report = decide_no_zero(inst("x1^2 + x0*x1"))
        assert report.no_zero is False
        assert report.g is None
        assert report.to_dict()["deg_g"] == -1

    def test_matches_exhaustive_search(self):
        rng = random.Random(53)
        for m in (PrimeModulus(3), P5, P7):
            for _ in range(20):
                f = random_instance(rng, m)
                has_zero = any(
                    m_eval(f.f, (t, x)) == 0 for t in range(m.p) for x in range(m.p)
                )
                assert decide_no_zero(f).no_zero == (not has_zero)

    def test_prime_guard(self):
        with pytest.raises(FieldTooLarge):
            decide_no_zero(inst("x1 - x0", PrimeModulus(103)))


def test_moebius():
    assert [moebius(k) for k in (1, 2, 3, 4, 5, 6, 8, 30)] == [1, -1, -1, 0, -1, 1, 0, -1]
    with pytest.raises(ValueError):
        moebius(0)


def test_exact_from_cumulative():
    assert exact_from_cumulative({1: 5, 2: 9}) == {1: 5, 2: 4}
    assert exact_from_cumulative({1: 2, 2: 2, 3: 5, 4: 2}) == {1: 2, 2: 0, 3: 3, 4: 0}


def strict_instance(rng: random.Random, m: PrimeModulus, top: int) -> BivariateInstance:
    """Random strict instance whose a_0(t) alone has the maximal degree ``top``."""
    n = rng.randint(1, 4)
    terms = {(0, n): 1}

    def coefficient(i: int, degree: int) -> None:
        terms[(degree, i)] = rng.randrange(1, m.p)
        for e in range(degree):
            if rng.random() < 0.5:
                terms[(e, i)] = rng.randrange(1, m.p)

    coefficient(0, top)
    for i in range(1, n):
        coefficient(i, rng.randint(0, top - 1))
    return BivariateInstance(MultiPoly(terms, 2, m), strict=True)


class TestDegreeExactness:
    def test_g_has_degree_m_times_p(self):
        rng = random.Random(55)
        primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
        for _ in range(50):
            m = PrimeModulus(rng.choice(primes))
            top = rng.randint(1, 3)
            f = strict_instance(rng, m, top)
            assert f.a0_has_degree_m and f.m == top
            assert build_g(f, Route.PRODUCT).degree == top * m.p


class TestRouteAgreement:
    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
    def test_product_and_sylvester_routes_agree(self, p):
        m = PrimeModulus(p)
        rng = random.Random(56 + p)
        for _ in range(10):
            n = rng.randint(1, 4)
            terms = {(0, n): 1}
            for _ in range(rng.randint(1, 3)):
                terms[(rng.randint(0, 2), rng.randint(0, n - 1))] = rng.randrange(1, p)
            f = BivariateInstance(MultiPoly(terms, 2, m))
            assert _g_or_none(f, Route.PRODUCT) == _g_or_none(f, Route.SYLVESTER)
