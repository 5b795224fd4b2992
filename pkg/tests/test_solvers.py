import numpy as np
import pytest

from conftest import random_irreducible, random_regular_matrix, random_regular_vector
from maxplus import TropMatrix, TropScalar, TropVector
from maxplus.errors import IrregularInput, ReducibleMatrix
from maxplus.linalg import add, big_trace, metric, residuate, scale, star
from maxplus.oracle import cycle_mean_oracle, feasible_sampler
from maxplus.solvers import (
    Classification,
    eigenvalue,
    eigenvectors,
    residual,
    solve_bellman,
    solve_bellman_inequality,
    solve_first_kind,
    solve_first_kind_inequality,
)

N = None
D1 = TropVector([14, 11, 16, 15])
D2 = TropVector([15, 15, 15, 15])
GEN_SS = TropMatrix([[-2, -3], [0, -1], [-3, -4], [0, 0]])


def bellman_lhs(A, x, b):
    return add(A @ x, b)


class TestFirstKind:
    def test_residual(self, sf_lags):
        assert residual(sf_lags, D1) == TropScalar(0)
        assert residual(sf_lags, D2) == TropScalar(4)
        assert residual(TropMatrix.identity(3), TropVector([1, -7, 2])) == TropScalar(0)

    def test_residual_rejects_irregular(self, sf_lags):
        with pytest.raises(IrregularInput):
            residual(sf_lags, TropVector([1, N, 2, 3]))
        with pytest.raises(IrregularInput):
            residual(TropMatrix([[1, 2], [N, N]]), TropVector([1, 1]))

    def test_solvable_case(self, sf_lags):
        out = solve_first_kind(sf_lags, D1)
        assert out.exact_max_solution == TropVector([6, 4, 5, 3])
        assert out.y1 == D1

    def test_unsolvable_case(self, sf_lags):
        out = solve_first_kind(sf_lags, D2)
        assert out.delta == TropScalar(4)
        assert out.exact_max_solution is None
        assert out.x0 == TropVector([9, 5, 6, 5])
        assert out.y0 == TropVector([17, 13, 17, 17])
        assert out.x1 == TropVector([7, 3, 4, 3])
        assert out.y1 == TropVector([15, 11, 15, 15])
        assert out.x2 == TropVector([11, 7, 8, 7])
        assert out.y2 == TropVector([19, 15, 19, 19])

    def test_identity(self):
        out = solve_first_kind(TropMatrix.identity(2), TropVector([5, 7]))
        assert out.delta == TropScalar(0)
        assert out.exact_max_solution == TropVector([5, 7])

    def test_sandwich_and_distances(self, rng):
        for _ in range(100):
            m, n = rng.integers(1, 6, size=2)
            A = random_regular_matrix(rng, m, n, integer=False)
            d = random_regular_vector(rng, m, integer=False)
            out = solve_first_kind(A, d)
            assert out.delta.value >= -1e-12
            assert np.all(out.y1.values <= d.values + 1e-9)
            assert np.all(out.y2.values >= d.values - 1e-9)
            assert metric(out.y1, d).isclose(out.delta)
            assert metric(out.y2, d).isclose(out.delta)
            assert abs(metric(out.y0, d).value - out.delta.value / 2) <= 1e-9

    def test_quasi_solution_is_best(self, rng):
        # Random x never gets closer to d than the quasi-solution.
        A = random_regular_matrix(rng, 4, 3)
        d = random_regular_vector(rng, 4)
        best = metric(solve_first_kind(A, d).y0, d).value
        for _ in range(500):
            x = TropVector(rng.uniform(-20, 20, size=3))
            assert metric(A @ x, d).value >= best - 1e-9

    def test_maximality(self, rng):
        hits = 0
        for _ in range(50):
            A = random_regular_matrix(rng, 4, 4)
            d = A @ random_regular_vector(rng, 4)
            out = solve_first_kind(A, d)
            assert out.solvable
            for x in feasible_sampler(A, d, 20, rng=rng, spread=2.0, step=1.0):
                if (A @ x).isclose(d):
                    hits += 1
                    assert np.all(x.values <= out.exact_max_solution.values + 1e-9)
        assert hits > 0


class TestFirstKindInequality:
    def test_mixed_example(self):
        B = TropMatrix([[10, 9], [8, 8], [12, 11], [12, 12]])
        assert solve_first_kind_inequality(B, TropVector([13, 11, 15, 15])) == TropVector([3, 3])

    def test_identity(self):
        d = TropVector([2, -1, 4])
        assert solve_first_kind_inequality(TropMatrix.identity(3), d) == d

    def test_maximality_probe(self, rng):
        eps = 1e-9
        for _ in range(50):
            A = random_regular_matrix(rng, 4, 3, integer=False)
            d = random_regular_vector(rng, 4, integer=False)
            x = solve_first_kind_inequality(A, d)
            assert np.all((A @ x).values <= d.values + eps)
            for j in range(3):
                bumped = x.values.copy()
                bumped[j] += 10 * eps
                assert np.any((A @ TropVector(bumped)).values > d.values)


class TestBellman:
    def test_homogeneous_example(self, ss_lags):
        out = solve_bellman(ss_lags, TropVector.zeros(4))
        assert out.classification is Classification.SOLUTION_FAMILY
        assert out.generators == GEN_SS

    def test_nonhomogeneous_example(self, ss_lags):
        b2 = TropVector([1, 1, 2, 1])
        out = solve_bellman(ss_lags, b2)
        assert out.classification is Classification.SOLUTION_FAMILY
        assert out.particular == TropVector([3, 5, 2, 5])
        assert out.generators == GEN_SS
        assert bellman_lhs(ss_lags, out.particular, b2) == out.particular

    def test_unique_solution(self, rng):
        # 3-cycle with total weight -1 and no loops
        A = TropMatrix([[N, N, 1], [-1, N, N], [N, -1, N]])
        assert big_trace(A) == TropScalar(-1)
        for _ in range(20):
            b = random_regular_vector(rng, 3)
            out = solve_bellman(A, b)
            assert out.classification is Classification.UNIQUE_SOLUTION
            assert bellman_lhs(A, out.particular, b) == out.particular

    def test_trichotomy(self):
        pos = TropMatrix([[1, 0], [0, N]])
        neg = TropMatrix([[-1, -1], [-1, N]])
        zero = TropVector.zeros(2)
        b = TropVector([0, 0])
        assert solve_bellman(pos, zero).classification is Classification.ONLY_TRIVIAL
        assert solve_bellman(pos, b).classification is Classification.NO_SOLUTION
        assert solve_bellman(neg, zero).classification is Classification.ONLY_TRIVIAL
        assert solve_bellman(neg, b).classification is Classification.UNIQUE_SOLUTION

    def test_reducible_rejected(self, sf_lags):
        with pytest.raises(ReducibleMatrix) as info:
            solve_bellman(sf_lags, TropVector.zeros(4))
        assert info.value.components == [[0, 1, 2], [3]]

    def test_family_substitution(self, rng):
        for _ in range(30):
            A = random_irreducible(rng, 4)
            A = scale(-eigenvalue(A).value, A)
            b = random_regular_vector(rng, 4)
            out = solve_bellman(A, b)
            assert out.classification is Classification.SOLUTION_FAMILY
            for _ in range(20):
                v = TropVector(rng.uniform(-10, 10, size=out.generators.shape[1]))
                x = add(out.particular, out.generators @ v)
                assert bellman_lhs(A, x, b).isclose(x)


class TestBellmanInequality:
    def test_worked_example(self, ss_lags):
        b2 = TropVector([1, 1, 2, 1])
        out = solve_bellman_inequality(ss_lags, b2)
        assert out.particular == TropVector([3, 5, 2, 5])
        assert np.all(bellman_lhs(ss_lags, out.particular, b2).values <= out.particular.values)
        assert out.generators == star(ss_lags)

    def test_homogeneous_family(self, ss_lags):
        out = solve_bellman_inequality(ss_lags, TropVector.zeros(4))
        assert out.classification is Classification.SOLUTION_FAMILY
        for j in range(4):
            e = np.full(4, -np.inf)
            e[j] = 0.0
            x = out.generators @ TropVector(e)
            assert np.all((ss_lags @ x).values <= x.values)

    def test_positive_trace(self):
        A = TropMatrix([[1, 0], [0, N]])
        assert solve_bellman_inequality(A, TropVector.zeros(2)).classification is Classification.ONLY_TRIVIAL
        assert solve_bellman_inequality(A, TropVector([0, 1])).classification is Classification.NO_SOLUTION

    def test_random_family(self, rng):
        A = random_irreducible(rng, 5)
        A = scale(-eigenvalue(A).value - 1, A)
        b = random_regular_vector(rng, 5)
        out = solve_bellman_inequality(A, b)
        for _ in range(100):
            v = TropVector(rng.uniform(-10, 10, size=5))
            x = out.generators @ add(b, v)
            assert np.all(bellman_lhs(A, x, b).values <= x.values + 1e-9)


class TestSpectral:
    def test_worked_example(self, sf_flow):
        assert eigenvalue(sf_flow) == TropScalar(4)
        out = eigenvectors(sf_flow)
        assert out.eigen_generators == TropMatrix([[1], [1], [0]])

    def test_single_loop(self):
        assert eigenvalue(TropMatrix([[2.5]])) == TropScalar(2.5)
        out = eigenvectors(TropMatrix([[2.5]]))
        assert out.eigen_generators == TropMatrix([[0]])
        # one loop on a 2-cycle of lower mean
        assert eigenvalue(TropMatrix([[3, -4], [1, N]])) == TropScalar(3)

    def test_against_cycle_enumeration(self, rng):
        for _ in range(50):
            A = random_irreducible(rng, 5, integer=False)
            assert eigenvalue(A).isclose(cycle_mean_oracle(A))

    def test_eigen_equation(self, rng):
        for _ in range(50):
            A = random_irreducible(rng, 4, integer=False)
            out = eigenvectors(A)
            for g in out.eigen_generators.columns():
                assert g.regular
                assert (A @ g).isclose(scale(out.eigenvalue, g))

    def test_scale_covariance(self, rng):
        for _ in range(20):
            A = random_irreducible(rng, 4)
            c = rng.uniform(-3, 3)
            assert eigenvalue(scale(c, A)).isclose(TropScalar(eigenvalue(A).value + c))

    def test_reducible_rejected(self, sf_lags):
        with pytest.raises(ReducibleMatrix):
            eigenvalue(sf_lags)

    def test_extremal_property(self, rng):
        A = random_irreducible(rng, 4)
        out = eigenvectors(A)
        lam = abs(out.eigenvalue.value)
        g = out.eigen_generators.column(0)
        assert abs(metric(A @ g, g).value - lam) <= 1e-9
        for _ in range(200):
            x = TropVector(rng.uniform(-10, 10, size=4))
            assert metric(A @ x, x).value >= lam - 1e-9


def test_residuate_matches_first_kind(sf_lags):
    assert residuate(sf_lags, D2) == solve_first_kind(sf_lags, D2).x1
