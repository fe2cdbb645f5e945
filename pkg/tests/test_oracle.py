"""Finite-field matrix oracle: ranks, Jordan types, expression evaluation."""

import math
import random

import numpy as np
import pytest

from helpers import naive_rank, rand_expr, unit_upper_inverse
from unipjordan.core import DomainError, JordanType, parse_partition
from unipjordan.expr import Atom, Dual, Tensor, Twist, parse_expr
from unipjordan.oracle import (
    DimensionCapError,
    FpMatrix,
    NotUnipotentError,
    direct_sum,
    expr_dim,
    expr_matrix,
    identity_matrix,
    jordan_type_of_unipotent,
    kron,
    oracle_certificate,
    oracle_eval,
    pascal_matrix,
    rank_mod_p,
    rank_sequence,
)
from unipjordan.sl2 import eval_expr, tensor_jordan, tilting_dim


class TestFpMatrix:
    def test_entry_validation(self):
        with pytest.raises(DomainError):
            FpMatrix(np.array([[5]], dtype=np.int64), 5)
        with pytest.raises(DomainError):
            FpMatrix(np.array([[-1]], dtype=np.int64), 5)
        with pytest.raises(DomainError):
            FpMatrix(np.array([1, 2], dtype=np.int64), 5)

    def test_pascal_examples(self):
        assert pascal_matrix(1, 7).array.tolist() == [[1, 1], [0, 1]]
        assert pascal_matrix(2, 2).array.tolist() == [[1, 1, 1], [0, 1, 0], [0, 0, 1]]

    @pytest.mark.parametrize("m,p", [(5, 5), (10, 3), (17, 7), (40, 2)])
    def test_pascal_entries_are_binomials(self, m, p):
        P = pascal_matrix(m, p).array
        for i in range(m + 1):
            for j in range(m + 1):
                assert P[i, j] == math.comb(j, i) % p

    def test_kron_identity(self):
        assert np.array_equal(kron(identity_matrix(2, 5), identity_matrix(3, 5)).array,
                              np.eye(6, dtype=np.int64))

    def test_direct_sum_dims(self):
        s = direct_sum(pascal_matrix(2, 5), pascal_matrix(4, 5))
        assert s.rows == s.cols == 8

    def test_characteristic_mismatch(self):
        with pytest.raises(DomainError):
            kron(pascal_matrix(1, 2), pascal_matrix(1, 3))
        with pytest.raises(DomainError):
            direct_sum(pascal_matrix(1, 2), pascal_matrix(1, 3))


class TestRank:
    def test_against_reference(self):
        rng = np.random.default_rng(8)
        for p in (2, 3, 5, 7, 11, 13):
            for trial in range(20):
                m = int(rng.integers(1, 60))
                n = int(rng.integers(1, 60))
                if trial % 2:
                    k = int(rng.integers(1, min(m, n) + 1))
                    A = (rng.integers(0, p, (m, k)) @ rng.integers(0, p, (k, n))) % p
                else:
                    A = rng.integers(0, p, (m, n))
                assert rank_mod_p(A, p) == naive_rank(A, p)

    def test_blocked_path_against_reference(self):
        import unipjordan.oracle as oracle_mod
        rng = np.random.default_rng(9)
        small = oracle_mod._SMALL
        oracle_mod._SMALL = 4  # force the blocked kernel
        try:
            for p in (2, 3, 5, 7):
                for _ in range(4):
                    m = int(rng.integers(80, 300))
                    n = int(rng.integers(80, 300))
                    k = int(rng.integers(1, min(m, n) + 1))
                    A = (rng.integers(0, p, (m, k)) @ rng.integers(0, p, (k, n))) % p
                    assert rank_mod_p(A, p) == naive_rank(A, p)
        finally:
            oracle_mod._SMALL = small


class TestJordanOfUnipotent:
    def test_identity(self):
        for n in (1, 4, 9):
            assert jordan_type_of_unipotent(identity_matrix(n, 3)) == \
                JordanType.from_blocks([(1, n)], 3)

    def test_pascal_examples(self):
        assert jordan_type_of_unipotent(pascal_matrix(10, 5)) == parse_partition("5^2 1", 5)
        assert jordan_type_of_unipotent(pascal_matrix(5, 5)) == parse_partition("5 1", 5)

    def test_kron_pascal_examples(self):
        got = jordan_type_of_unipotent(kron(pascal_matrix(1, 5), pascal_matrix(4, 5)))
        assert got == tensor_jordan(2, 5, 5) == parse_partition("5^2", 5)
        got = jordan_type_of_unipotent(kron(pascal_matrix(2, 5), pascal_matrix(2, 5)))
        assert got == tensor_jordan(3, 3, 5) == parse_partition("5 3 1", 5)

    def test_rejects_non_unipotent(self):
        # order-3 element of GL2(F2)
        M = FpMatrix(np.array([[0, 1], [1, 1]], dtype=np.int64), 2)
        with pytest.raises(NotUnipotentError):
            jordan_type_of_unipotent(M)

    def test_rejects_order_p_squared(self):
        J4 = np.eye(4, dtype=np.int64)
        J4[0, 1] = J4[1, 2] = J4[2, 3] = 1
        with pytest.raises(NotUnipotentError):
            jordan_type_of_unipotent(FpMatrix(J4, 2))
        # the same matrix is fine at p = 5
        assert jordan_type_of_unipotent(FpMatrix(J4, 5)) == parse_partition("4", 5)

    def test_rejects_non_square(self):
        with pytest.raises(DomainError):
            rank_sequence(FpMatrix(np.zeros((2, 3), dtype=np.int64), 2))

    def test_rank_sequence_sanity(self):
        rng = random.Random(12)
        for p in (2, 3, 5, 7):
            for _ in range(25):
                e = rand_expr(rng, depth=2, p=p, kinds="LV")
                if expr_dim(e, p) > 200:
                    continue
                ranks = rank_sequence(expr_matrix(e, p))
                n = ranks[0]
                assert ranks[-1] == 0
                assert all(a >= b for a, b in zip(ranks, ranks[1:]))
                padded = ranks + [0]
                for k in range(1, len(ranks)):
                    assert padded[k - 1] - 2 * padded[k] + padded[k + 1] >= 0
                assert len(ranks) - 2 <= p


class TestSuperadditivity:
    def test_size_p_count_dominates_filtration(self):
        # random unipotent upper-triangular matrices with known type, cut
        # along coordinate flags: blocks of size p in the whole are at
        # least the sum over the diagonal quotients
        rng = np.random.default_rng(13)
        for p in (2, 3, 5):
            for _ in range(12):
                sizes = [int(rng.integers(1, p + 1)) for _ in range(int(rng.integers(2, 6)))]
                n = sum(sizes)
                D = np.eye(n, dtype=np.int64)
                pos = 0
                for s in sizes:
                    for k in range(s - 1):
                        D[pos + k, pos + k + 1] = 1
                    pos += s
                Q = np.triu(rng.integers(0, p, (n, n)), 1) % p + np.eye(n, dtype=np.int64)
                M = (Q @ D @ unit_upper_inverse(Q, p)) % p
                whole = jordan_type_of_unipotent(FpMatrix(M, p))
                assert whole == JordanType.from_sizes(sizes, p)  # conjugation-invariant
                cuts = sorted(rng.choice(range(1, n), size=min(2, n - 1), replace=False)) \
                    if n > 1 else []
                bounds = [0] + list(cuts) + [n]
                total = 0
                for a, b in zip(bounds, bounds[1:]):
                    part = jordan_type_of_unipotent(FpMatrix(M[a:b, a:b] % p, p))
                    total += part.size_p_multiplicity
                assert whole.size_p_multiplicity >= total


class TestOracleEval:
    def test_examples(self):
        assert oracle_eval(parse_expr("V(10)"), 5) == parse_partition("5^2 1", 5)
        assert oracle_eval(parse_expr("L(0)"), 5) == parse_partition("1", 5)
        assert oracle_eval(parse_expr("L(14)"), 5) == parse_partition("5^3", 5)

    def test_t_atoms_rejected(self):
        with pytest.raises(DomainError):
            oracle_eval(parse_expr("T(6)"), 5)

    def test_dim_cap(self):
        with pytest.raises(DimensionCapError):
            oracle_eval(parse_expr("V(99)*V(99)"), 5, dim_cap=4096)
        # the cap is configurable
        oracle_eval(parse_expr("V(9)*V(9)"), 5, dim_cap=100)

    def test_twist_and_dual_act_trivially_on_matrices(self):
        # entries lie in the prime field, fixed by Frobenius; this is a
        # tested invariant rather than an assumption
        rng = random.Random(14)
        for p in (2, 3, 5):
            for _ in range(30):
                e = rand_expr(rng, depth=2, p=p, kinds="LV")
                if expr_dim(e, p) > 300:
                    continue
                M = expr_matrix(e, p)
                for wrapped in (Dual(e), Twist(e, 2)):
                    assert np.array_equal(expr_matrix(wrapped, p).array, M.array)

    def test_agreement_with_closed_forms_randomized(self):
        rng = random.Random(15)
        checked = 0
        for p in (2, 3, 5, 7):
            for _ in range(150):
                e = rand_expr(rng, depth=rng.randrange(0, 4), p=p, kinds="LV")
                if expr_dim(e, p) > 512:
                    continue
                assert oracle_eval(e, p) == eval_expr(e, p).jordan
                checked += 1
        assert checked > 200

    def test_tilting_consistency_via_steinberg_tensor(self):
        # T(p-1+r) for 1 <= r <= p-1 is a 2p-dimensional direct summand of
        # L(p-1) (x) L(r); the oracle shows that module is free over K[u]
        # (all blocks of size p), and a direct summand of a free module is
        # free, forcing 2.J_p
        for p in (2, 3, 5, 7):
            for r in range(0, p):
                t = oracle_eval(Tensor(Atom("L", p - 1), Atom("L", r)), p)
                assert t.blocks == ((p, r + 1),)
                if r >= 1:
                    assert tilting_dim(p - 1 + r, p) == 2 * p


class TestCertificate:
    def test_structure(self):
        cert = oracle_certificate(parse_expr("V(10)"), 5)
        assert cert["expr"] == "V(10)"
        assert cert["p"] == 5
        assert cert["dim"] == 11
        assert cert["ranks"] == [11, 8, 6, 4, 2, 0]
        assert cert["jordan"] == [[5, 2], [1, 1]]

    def test_round_trips_through_json(self):
        import json
        cert = oracle_certificate(parse_expr("L(8)[1]^*"), 5)
        assert json.loads(json.dumps(cert)) == cert


class TestFallbackPaths:
    def test_numpy_only_panel_matches_reference(self, monkeypatch):
        # exercise the elimination with the compiled kernels disabled
        import unipjordan.oracle as oracle_mod
        monkeypatch.setattr(oracle_mod, "_HAVE_NUMBA", False)
        rng = np.random.default_rng(77)
        for p in (2, 3, 5, 7):
            for _ in range(6):
                m = int(rng.integers(1, 120))
                n = int(rng.integers(1, 120))
                k = int(rng.integers(1, min(m, n) + 1))
                A = (rng.integers(0, p, (m, k)) @ rng.integers(0, p, (k, n))) % p
                assert rank_mod_p(A, p) == naive_rank(A, p)

    def test_numpy_only_oracle_agrees(self, monkeypatch):
        import unipjordan.oracle as oracle_mod
        monkeypatch.setattr(oracle_mod, "_HAVE_NUMBA", False)
        rng = random.Random(78)
        for p in (2, 3, 5):
            for _ in range(20):
                e = rand_expr(rng, depth=2, p=p, kinds="LV")
                if expr_dim(e, p) > 200:
                    continue
                assert oracle_eval(e, p) == eval_expr(e, p).jordan

    def test_large_characteristic_uses_float64(self):
        import unipjordan.oracle as oracle_mod
        assert oracle_mod._float_dtype(50, 1009) == np.float64
        P = pascal_matrix(40, 1009)
        t = jordan_type_of_unipotent(P)
        assert t == parse_partition("41", 1009)
        rng = np.random.default_rng(79)
        A = rng.integers(0, 1009, (60, 60))
        assert rank_mod_p(A, 1009) == naive_rank(A, 1009)

    def test_absurd_characteristic_rejected(self):
        import unipjordan.oracle as oracle_mod
        with pytest.raises(DomainError):
            oracle_mod._float_dtype(4096, 10 ** 9)


class TestEchelonRowSpace:
    def test_rows_span_input_row_space_with_unit_pivots(self):
        # rank_sequence relies on rowspace(R @ N) = rowspace(N^{k+1}),
        # which needs the echelon rows to be an actual row-space basis
        import unipjordan.oracle as oracle_mod
        rng = np.random.default_rng(55)
        for force_blocked in (False, True):
            saved = oracle_mod._SMALL
            if force_blocked:
                oracle_mod._SMALL = 0
            try:
                for p in (2, 3, 5, 7):
                    for trial in range(10):
                        m = int(rng.integers(1, 100))
                        n = int(rng.integers(1, 100))
                        A = rng.integers(0, p, (m, n))
                        if trial % 2:
                            k = int(rng.integers(1, min(m, n) + 1))
                            A = (rng.integers(0, p, (m, k))
                                 @ rng.integers(0, p, (k, n))) % p
                        R, piv = oracle_mod._echelon(A.astype(np.float64) % p, p)
                        r = R.shape[0]
                        assert r == naive_rank(A, p) == len(piv)
                        for i in range(r):
                            assert R[i, piv[i]] == 1
                            assert all(R[j, piv[i]] == 0 for j in range(i + 1, r))
                        if r:
                            stacked = np.vstack([A % p, R.astype(np.int64)])
                            assert naive_rank(stacked, p) == r
            finally:
                oracle_mod._SMALL = saved
