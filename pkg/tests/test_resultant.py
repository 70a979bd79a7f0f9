"""Tests for parametric resultants and the determinant strategies."""

import math
import random

import pytest
import sympy
from src.ffelim.errors import (
    BothConstantInVar,
    DegenerateSpecialization,
    DimensionTooLarge,
    DivisionByZero,
    FieldTooSmall,
    InexactDivision,
    ZeroPolynomial,
)
from src.ffelim.field.prime import PrimeModulus
from src.ffelim.oracle import brute_common_root
from src.ffelim.poly.grammar import m_parse
from src.ffelim.poly.mpoly import MultiPoly, m_degree_in, m_eval_partial, to_upoly
from src.ffelim.poly.upoly import u_resultant
from src.ffelim.resultant import (
    PolyFraction,
    SylvesterMatrix,
    propagate,
    res,
    res_interp,
    res_leibniz,
    res_propagate,
    res_resolved,
    resolve_strategy,
    sylvester_build,
)
from src.ffelim.resultant.strategies import resultant_dimension
from src.ffelim.types import Strategy

P2 = PrimeModulus(2)
P3 = PrimeModulus(3)
P5 = PrimeModulus(5)
P7 = PrimeModulus(7)
P11 = PrimeModulus(11)
P31 = PrimeModulus(31)

STRATEGIES = [Strategy.LEIBNIZ, Strategy.PROPAGATE, Strategy.INTERP]


def mp(text: str, arity: int = 2, m: PrimeModulus = P7) -> MultiPoly:
    return m_parse(text, arity, m)


def const_rows(rows, arity: int = 1, m: PrimeModulus = P7) -> SylvesterMatrix:
    return SylvesterMatrix.from_rows(
        [[MultiPoly.constant(v, arity, m) for v in row] for row in rows], var=arity - 1
    )


def values(matrix: SylvesterMatrix):
    return [[e.constant_value() for e in row] for row in matrix.entries]


def random_pair(rng: random.Random, m: PrimeModulus, arity: int = 2, x_deg: int = 3, other_deg: int = 2):
    """Two polynomials of degree >= 1 in the last variable."""
    x = arity - 1

    def one() -> MultiPoly:
        while True:
            terms = {}
            for _ in range(rng.randint(1, 4)):
                exps = [rng.randint(0, other_deg) for _ in range(arity)]
                exps[x] = rng.randint(0, x_deg)
                terms[tuple(exps)] = rng.randrange(1, m.p)
            f = MultiPoly(terms, arity, m)
            if not f.is_zero() and m_degree_in(f, x) >= 1:
                return f

    return one(), one()


def sympy_resultant(alpha: MultiPoly, beta: MultiPoly) -> MultiPoly:
    """Res_x1 as the determinant of the integer Sylvester matrix over Z[t], reduced mod p."""
    t = sympy.Symbol("t")

    def coefficients(f: MultiPoly) -> list:
        d = m_degree_in(f, 1)
        out = [0] * (d + 1)
        for (i, j), c in f.terms.items():
            out[d - j] += c * t**i
        return out

    a, b = coefficients(alpha), coefficients(beta)
    da, db = len(a) - 1, len(b) - 1
    n = da + db
    rows = [[0] * k + a + [0] * (db - 1 - k) for k in range(db)]
    rows += [[0] * k + b + [0] * (da - 1 - k) for k in range(da)]
    det = sympy.expand(sympy.Matrix(rows).det()) if n else 1
    p = alpha.modulus.p
    terms = {(e[0], 0): int(c) % p for e, c in sympy.Poly(det, t).terms() if int(c) % p}
    return MultiPoly(terms, 2, alpha.modulus)


def test_sylvester_linear_pair():
    a, b = 3, 5
    m = sylvester_build(mp(f"x0 - {a}", 1), mp(f"x0 - {b}", 1), 0)
    assert values(m) == [[1, 7 - a], [1, 7 - b]]
    assert res_leibniz(m).constant_value() == (a - b) % 7


def test_sylvester_layout():
    m = sylvester_build(mp("x0^2 + 1", 1), mp("x0 + 1", 1), 0)
    assert (m.dim, m.d_alpha, m.d_beta) == (3, 2, 1)
    assert values(m) == [[1, 0, 1], [1, 1, 0], [0, 1, 1]]


def test_sylvester_parametric_entries():
    alpha, beta = mp("x1^2 - x0", m=P5), mp("x1^5 - x1", m=P5)
    m = sylvester_build(alpha, beta, 1)
    assert m.dim == 7
    t = MultiPoly.var(0, 2, P5)
    zero = MultiPoly.zero(2, P5)
    one = MultiPoly.constant(1, 2, P5)
    assert list(m.entries[0]) == [one, zero, -t, zero, zero, zero, zero]
    assert list(m.entries[4]) == [zero, zero, zero, zero, one, zero, -t]
    assert m.entries[5][0] == one and m.entries[5][4] == -one
    assert m.entries[6][1] == one and m.entries[6][5] == -one
    assert resultant_dimension(alpha, beta, 1) == (7, 2, 5)


def test_sylvester_errors():
    with pytest.raises(ZeroPolynomial):
        sylvester_build(MultiPoly.zero(2, P7), mp("x1"), 1)
    with pytest.raises(BothConstantInVar):
        sylvester_build(mp("x0 + 1"), mp("x0^2"), 1)
    with pytest.raises(ValueError):
        SylvesterMatrix.from_rows([[mp("x1")]], var=1)
    with pytest.raises(ValueError):
        const_rows([[1, 2], [3]])


def test_leibniz_examples():
    assert res_leibniz(const_rows([[1, 0, 1], [1, 1, 0], [0, 1, 1]])).constant_value() == 2
    assert res_leibniz(const_rows([[1, 2], [1, 2]])).is_zero()
    assert res_leibniz(const_rows([[0, 1], [1, 0]])).constant_value() == 6


def test_leibniz_dimension_cap():
    m = sylvester_build(mp("x0^5 + 1", 1), mp("x0^4 + 1", 1), 0)
    assert m.dim == 9
    with pytest.raises(DimensionTooLarge):
        res_leibniz(m)
    with pytest.raises(DimensionTooLarge):
        res(mp("x0^5 + 1", 1), mp("x0^4 + 1", 1), 0, Strategy.LEIBNIZ)
    assert res_leibniz(m, max_dim=9) == res_propagate(m)


def test_propagation_history():
    state = propagate(const_rows([[1, 0, 1], [1, 1, 0], [0, 1, 1]]))
    assert state.stall_k is None
    assert [s.k for s in state.history] == [1, 2, 3]
    assert [s.det.constant_value() for s in state.history] == [1, 1, 2]
    assert state.row_ids == [0, 1, 2] and state.col_ids == [0, 1, 2]


def test_propagation_stalls_on_singular_matrix():
    m = const_rows([[1, 0, 0], [0, 1, 0], [1, 1, 0]])
    state = propagate(m)
    assert state.stall_k == 2
    assert state.history[-1].stalled
    assert res_propagate(m).is_zero()


def test_propagation_pivots_and_sign():
    m = const_rows([[0, 1], [1, 0]])
    state = propagate(m)
    assert state.row_ids == [1, 0]
    assert res_propagate(m).constant_value() == 6


def test_propagation_state_invariants():
    """det is det(S_k) and adjugate / det inverts S_k at the end of the run."""
    rng = random.Random(30)
    checked = 0
    for _ in range(40):
        alpha, beta = random_pair(rng, P7, x_deg=2, other_deg=1)
        m = sylvester_build(alpha, beta, 1)
        state = propagate(m)
        if state.stall_k is not None:
            continue
        checked += 1
        sub = state.submatrix(m)
        assert res_leibniz(SylvesterMatrix.from_rows(sub, var=1)) == state.det
        inverse = state.inverse()
        zero = MultiPoly.zero(2, P7)
        for i in range(state.k):
            for j in range(state.k):
                total = PolyFraction.of(zero)
                for k in range(state.k):
                    total = total + inverse[i][k] * sub[k][j]
                assert total == MultiPoly.constant(1 if i == j else 0, 2, P7)
    assert checked > 0


def test_known_bivariate_resultant():
    """Res_x(x^2 - t, x^5 - x) = -t(t^2 - 1)^2."""
    for m in (P5, P11):
        alpha, beta = mp("x1^2 - x0", m=m), mp("x1^5 - x1", m=m)
        expected = mp("-x0^5 + 2*x0^3 - x0", m=m)
        for strategy in STRATEGIES:
            assert res(alpha, beta, 1, strategy) == expected


def test_strategies_agree_with_sympy():
    rng = random.Random(31)
    for _ in range(60):
        m = rng.choice([P5, P7, P11, PrimeModulus(31)])
        alpha, beta = random_pair(rng, m)
        expected = sympy_resultant(alpha, beta)
        for strategy in STRATEGIES + [Strategy.AUTO]:
            assert res(alpha, beta, 1, strategy) == expected


def test_propagate_matches_leibniz_in_three_variables():
    rng = random.Random(32)
    for _ in range(40):
        alpha, beta = random_pair(rng, P7, arity=3, x_deg=2, other_deg=1)
        m = sylvester_build(alpha, beta, 2)
        assert res_propagate(m) == res_leibniz(m)
        assert res(alpha, beta, 2) == res_leibniz(m)


def test_swap_sign():
    rng = random.Random(33)
    for _ in range(100):
        alpha, beta = random_pair(rng, P11)
        da, db = m_degree_in(alpha, 1), m_degree_in(beta, 1)
        forward = res(alpha, beta, 1)
        backward = res(beta, alpha, 1)
        assert backward == (forward if (da * db) % 2 == 0 else -forward)


def test_specialization_commutes():
    rng = random.Random(34)
    for _ in range(100):
        alpha, beta = random_pair(rng, P11)
        r = res(alpha, beta, 1)
        for c in range(11):
            sa, sb = m_eval_partial(alpha, {0: c}), m_eval_partial(beta, {0: c})
            if m_degree_in(sa, 1) != m_degree_in(alpha, 1) or m_degree_in(sb, 1) != m_degree_in(beta, 1):
                continue
            expected = u_resultant(to_upoly(sa, 1), to_upoly(sb, 1)).value
            assert m_eval_partial(r, {0: c}).constant_value() == expected


def test_degree_bound():
    rng = random.Random(35)
    for _ in range(100):
        alpha, beta = random_pair(rng, P7)
        da, db = m_degree_in(alpha, 1), m_degree_in(beta, 1)
        bound = db * m_degree_in(alpha, 0) + da * m_degree_in(beta, 0)
        assert m_degree_in(res(alpha, beta, 1), 0) <= bound


def test_shared_factor_gives_zero():
    alpha = mp("(x1 - x0)*(x1 + 1)")
    beta = mp("(x1 - x0)*(x1 + 2)")
    for strategy in STRATEGIES:
        assert res(alpha, beta, 1, strategy).is_zero()


def test_interp_without_parameter():
    r = res_interp(mp("x1^2 + 1"), mp("x1 + 1"), 1)
    assert r == MultiPoly.constant(2, 2, P7)


def test_interp_eliminating_first_variable():
    alpha, beta = mp("x0^2 - x1", m=P11), mp("x0^5 - x0", m=P11)
    assert res_interp(alpha, beta, 0) == mp("-x1^5 + 2*x1^3 - x1", m=P11)


def test_interp_vanishing_leading_coefficients():
    """Both leading coefficients vanish at t = 0; the resultant is still t."""
    alpha, beta = mp("x0*x1 + 1"), mp("x0*x1 + 2")
    assert res_interp(alpha, beta, 1) == MultiPoly.var(0, 2, P7)
    assert res(alpha, beta, 1, Strategy.LEIBNIZ) == MultiPoly.var(0, 2, P7)


def test_interp_budget_and_field_limits():
    with pytest.raises(DegenerateSpecialization):
        res_interp(mp("x0*x1 + 1"), mp("x0*x1 + 2"), 1, budget_factor=1)
    with pytest.raises(FieldTooSmall):
        res_interp(mp("x1^2 - x0", m=P5), mp("x1^5 - x1", m=P5), 1, max_extension=1)
    with pytest.raises(ValueError):
        res_interp(mp("x0 + x1", 3), mp("x2", 3), 2)


def test_poly_fraction():
    x0 = MultiPoly.var(0, 2, P7)
    x1 = MultiPoly.var(1, 2, P7)
    one = MultiPoly.constant(1, 2, P7)

    reduced = PolyFraction(x0 * x0 * x1, x0 * x1).reduce()
    assert reduced.is_polynomial()
    assert reduced.as_polynomial() == x0

    f = PolyFraction(x0 + 1, x0) + PolyFraction(one, x0)
    assert f == PolyFraction(x0 + 2, x0)
    assert not f.is_polynomial()
    with pytest.raises(InexactDivision):
        f.as_polynomial()

    assert PolyFraction(x0, x1) * PolyFraction(x1, x0) == one
    assert PolyFraction(x0, x1) / PolyFraction(x0, x1) == one
    assert (PolyFraction(x0, x1) - PolyFraction(x0, x1)).is_zero()
    assert PolyFraction(x0 * 3, x1 * 3).reduce().den == x1

    with pytest.raises(DivisionByZero):
        PolyFraction(x0, MultiPoly.zero(2, P7))
    with pytest.raises(DivisionByZero):
        PolyFraction.of(MultiPoly.zero(2, P7)).inverse()


class TestAutoDispatch:
    def test_small_field_resolves_to_propagate(self):
        """D = 6 and N = 19 sample points do not fit in GF(2^4)."""
        alpha = mp("x1^3 + x0^3*x1 + 1", m=P2)
        beta = mp("x1^3 + x0^3 + x1", m=P2)
        expected = res_leibniz(sylvester_build(alpha, beta, 1))

        assert resolve_strategy(alpha, beta, 1) == Strategy.PROPAGATE
        assert res(alpha, beta, 1) == expected
        assert res(alpha, beta, 1, Strategy.PROPAGATE) == expected
        with pytest.raises(FieldTooSmall):
            res(alpha, beta, 1, Strategy.INTERP)

    def test_resolution_rules(self):
        small = (mp("x1^2 + x0"), mp("x1 + 1"))
        assert resolve_strategy(*small, 1) == Strategy.LEIBNIZ
        assert resolve_strategy(*small, 1, auto_leibniz_max_dim=3) == Strategy.LEIBNIZ
        assert resolve_strategy(*small, 1, auto_leibniz_max_dim=1) == Strategy.INTERP
        assert resolve_strategy(*small, 1, Strategy.PROPAGATE) == Strategy.PROPAGATE

        three = (mp("x2^3 + x0", 3), mp("x2^3 + x1", 3))
        assert resolve_strategy(*three, 2) == Strategy.PROPAGATE

    def test_degenerate_interpolation_falls_back(self):
        alpha, beta = mp("x0*x1 + 1"), mp("x0*x1 + 2")
        r, used = res_resolved(alpha, beta, 1, auto_leibniz_max_dim=0, interp_budget_factor=1)
        assert used == Strategy.PROPAGATE
        assert r == MultiPoly.var(0, 2, P7)
        with pytest.raises(DegenerateSpecialization):
            res_resolved(alpha, beta, 1, Strategy.INTERP, interp_budget_factor=1)

    def test_reports_the_strategy_used(self):
        r, used = res_resolved(mp("x1^2 + 1"), mp("x1 + 1"), 1)
        assert used == Strategy.LEIBNIZ
        assert r == MultiPoly.constant(2, 2, P7)


class TestMinimality:
    """A vanishing specialized resultant means a common root in a small extension."""

    @pytest.mark.parametrize("m", [P3, P5, P7])
    def test_vanishing_resultant_has_common_root(self, m):
        rng = random.Random(40 + m.p)
        checked = 0
        for _ in range(20):
            alpha, beta = random_pair(rng, m, x_deg=3, other_deg=2)
            da, db = m_degree_in(alpha, 1), m_degree_in(beta, 1)
            r = res(alpha, beta, 1)
            for c in range(m.p):
                sa, sb = m_eval_partial(alpha, {0: c}), m_eval_partial(beta, {0: c})
                if sa.is_zero() or sb.is_zero():
                    continue
                if m_degree_in(sa, 1) < da and m_degree_in(sb, 1) < db:
                    continue
                vanishes = m_eval_partial(r, {0: c}).constant_value() == 0
                root = brute_common_root(to_upoly(sa, 1), to_upoly(sb, 1), 3)
                assert vanishes == (root is not None)
                checked += 1
        assert checked > 0

    @pytest.mark.parametrize("m", [P3, P5, P7])
    def test_both_leading_coefficients_vanish(self, m):
        """Res_x(tx + 1, tx + 2) = t, yet at t = 0 there is no common root."""
        alpha, beta = mp("x0*x1 + 1", m=m), mp("x0*x1 + 2", m=m)
        r = res(alpha, beta, 1)
        assert r == MultiPoly.var(0, 2, m)
        assert m_eval_partial(r, {0: 0}).is_zero()

        sa, sb = m_eval_partial(alpha, {0: 0}), m_eval_partial(beta, {0: 0})
        assert brute_common_root(to_upoly(sa, 1), to_upoly(sb, 1), 3) is None


class TestStrategyAgreement:
    def test_random_instances_agree_and_respect_bounds(self):
        rng = random.Random(36)
        moduli = [P7, P11, P31]
        for index in range(100):
            m = moduli[index % 3]
            arity = 2 if index % 2 == 0 else 3
            var = arity - 1
            alpha, beta = random_pair(rng, m, arity=arity, x_deg=3, other_deg=2)
            matrix = sylvester_build(alpha, beta, var)
            expected = res_leibniz(matrix)

            assert res_propagate(matrix) == expected
            if arity == 2:
                assert res_interp(alpha, beta, var) == expected
            assert res(alpha, beta, var) == expected

            dim = matrix.dim
            l_max = max(len(e) for row in matrix.entries for e in row)
            assert len(expected) <= math.factorial(dim) * l_max**dim
            for other in range(var):
                delta = max(m_degree_in(alpha, other), m_degree_in(beta, other))
                assert m_degree_in(expected, other) <= dim * delta
