import math

import numpy as np
import pytest

from eigsum.linalg import (
    KSubsetIndex,
    SymMatrix,
    additive_compound,
    compound,
    eig_sym,
    ksubsets_lex,
    numeric_derivative_compound,
)
from eigsum.rng import XorShift64Star


def rand_sym(rng, n, lo=-5, hi=5):
    return np.array(rng.random_symmetric_int_matrix(n, lo, hi), dtype=float)


class TestEigSym:
    def test_diagonal(self):
        spec = eig_sym(np.diag([3.0, 1.0, 2.0]))
        assert spec.values == (3.0, 2.0, 1.0)

    def test_q_k3(self):
        # charpoly (x-4)(x-1)^2 expanded by hand: x^3 - 6x^2 + 9x - 4
        q = np.array([[2, 1, 1], [1, 2, 1], [1, 1, 2]], dtype=float)
        vals = eig_sym(q).values
        assert np.allclose(vals, (4, 1, 1), atol=1e-9)

    def test_two_by_two(self):
        vals = eig_sym(np.array([[0.0, 1.0], [1.0, 0.0]])).values
        assert np.allclose(vals, (1, -1), atol=1e-12)

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError, match="finite"):
            eig_sym(np.array([[np.nan, 0.0], [0.0, 1.0]]))

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            eig_sym(np.array([[0.0, 1.0], [0.5, 0.0]]))

    def test_reconstruction_residual(self):
        rng = XorShift64Star(11)
        for _ in range(50):
            a = rand_sym(rng, rng.randint(1, 8))
            spec, vecs = eig_sym(a, vectors=True)
            recon = vecs @ np.diag(spec.values) @ vecs.T
            scale = max(1.0, np.abs(a).max())
            assert np.abs(a - recon).max() <= 1e-10 * scale

    def test_trace_identity(self):
        rng = XorShift64Star(12)
        for _ in range(100):
            n = rng.randint(1, 8)
            a = rand_sym(rng, n)
            vals = eig_sym(a).values
            assert abs(sum(vals) - np.trace(a)) <= 1e-9 * n * max(1.0, np.abs(a).max())

    def test_symmatrix_wrapper(self):
        m = SymMatrix(np.array([[1, 2], [2, 1]]))
        assert m.order == 2
        assert eig_sym(m).values == (3.0, -1.0)
        with pytest.raises(ValueError):
            SymMatrix(np.array([[1, 2], [3, 1]]))


class TestKSubsets:
    def test_lex_order_n4_k2(self):
        idx = ksubsets_lex(4, 2)
        assert idx.sets == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

    def test_single(self):
        assert ksubsets_lex(3, 3).sets == ((1, 2, 3),)

    def test_count(self):
        assert len(ksubsets_lex(5, 2).sets) == 10

    def test_position_lookup(self):
        idx = ksubsets_lex(4, 2)
        assert idx.position((1, 2)) == 1
        assert idx.position((3, 4)) == 6
        assert idx.position({4, 2}) == 5

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            ksubsets_lex(3, 4)
        with pytest.raises(ValueError):
            ksubsets_lex(3, 0)


class TestCompound:
    def test_order_one_is_identity_map(self):
        rng = XorShift64Star(3)
        a = rand_sym(rng, 4)
        assert np.allclose(compound(a, 1), a)

    def test_full_order_is_det(self):
        rng = XorShift64Star(4)
        a = rand_sym(rng, 4)
        c = compound(a, 4)
        assert c.shape == (1, 1)
        assert np.isclose(c[0, 0], np.linalg.det(a))

    def test_diagonal_minors(self):
        c = compound(np.diag([2.0, 3.0, 5.0]), 2)
        assert np.allclose(c, np.diag([6.0, 10.0, 15.0]))

    def test_binet_cauchy(self):
        rng = XorShift64Star(9)
        for _ in range(50):
            n = rng.randint(2, 5)
            k = rng.randint(1, n)
            a = rand_sym(rng, n, -3, 3)
            b = rand_sym(rng, n, -3, 3)
            lhs = compound(a @ b, k)
            rhs = compound(a, k) @ compound(b, k)
            assert np.abs(lhs - rhs).max() <= 1e-8


class TestAdditiveCompound:
    def test_order_one(self):
        rng = XorShift64Star(6)
        a = rand_sym(rng, 5)
        assert np.allclose(additive_compound(a, 1), a)

    def test_diagonal(self):
        d = additive_compound(np.diag([2.0, 3.0, 5.0]), 2)
        assert np.allclose(d, np.diag([5.0, 7.0, 8.0]))

    def test_quotient_closed_form(self):
        # quotient matrix of the star-plus graph and its known second compound
        for a in range(3, 13):
            q = np.array([[3, 1, 0], [2, a, a - 2], [0, 1, 1]])
            d2 = additive_compound(q, 2)
            expect = np.array([[a + 3, a - 2, 0], [1, 4, 1], [0, 2, a + 1]])
            assert (d2 == expect).all()

    def test_integer_exactness_and_linearity(self):
        rng = XorShift64Star(7)
        for _ in range(30):
            n = rng.randint(2, 5)
            k = rng.randint(1, n)
            a = np.array(rng.random_symmetric_int_matrix(n))
            b = np.array(rng.random_symmetric_int_matrix(n))
            lhs = additive_compound(a + b, k)
            rhs = additive_compound(a, k) + additive_compound(b, k)
            assert (lhs == rhs).all()

    def test_trace_identity(self):
        rng = XorShift64Star(8)
        for _ in range(30):
            n = rng.randint(2, 6)
            k = rng.randint(1, n)
            a = np.array(rng.random_symmetric_int_matrix(n))
            assert np.trace(additive_compound(a, k)) == math.comb(n - 1, k - 1) * np.trace(a)

    def test_spectral_mapping(self):
        rng = XorShift64Star(13)
        for _ in range(100):
            n = rng.randint(2, 6)
            k = rng.randint(2, min(3, n))
            a = rand_sym(rng, n)
            lam = eig_sym(a).values
            expect = sorted(
                (sum(lam[i - 1] for i in s) for s in ksubsets_lex(n, k).sets),
                reverse=True,
            )
            got = sorted(eig_sym(additive_compound(a, k)).values, reverse=True)
            assert max(abs(x - y) for x, y in zip(expect, got)) <= 1e-8


class TestDerivativeOracle:
    def test_k1_exact(self):
        rng = XorShift64Star(14)
        a = rand_sym(rng, 4)
        assert np.allclose(numeric_derivative_compound(a, 1, 0.37), a, atol=1e-12)

    def test_zero_matrix(self):
        z = np.zeros((4, 4))
        assert np.allclose(numeric_derivative_compound(z, 2, 1e-3), np.zeros((6, 6)))

    def test_matches_closed_form_quotient(self):
        q = np.array([[3, 1, 0], [2, 3, 1], [0, 1, 1]], dtype=float)
        d2 = additive_compound(q, 2)
        approx = numeric_derivative_compound(q, 2, 1e-6)
        assert np.abs(approx - d2).max() <= 1e-4

    def test_first_order_convergence(self):
        rng = XorShift64Star(15)
        for _ in range(20):
            n = rng.randint(2, 5)
            k = rng.randint(1, n)
            a = rand_sym(rng, n, -3, 3)
            exactk = additive_compound(a, k)
            for t in (1e-4, 1e-6):
                approx = numeric_derivative_compound(a, k, t)
                assert np.abs(approx - exactk).max() <= 100 * t * max(
                    1.0, np.abs(a).max() ** k
                )

    def test_rejects_zero_step(self):
        with pytest.raises(ValueError):
            numeric_derivative_compound(np.eye(3), 2, 0.0)
