"""Brute-force verification over GF(p): explicit matrices and exact ranks.

This module is the independent check on the closed-form calculus: it
builds the unipotent element as an explicit matrix over the prime field
(Pascal matrices for Weyl modules, Kronecker products of digit Pascal
matrices for irreducibles) and reads the Jordan type off the rank
sequence of powers of (M - I).  Nothing here consults the closed forms.

Rank computation is exact Gaussian elimination over GF(p).  Large
matrices go through a blocked elimination whose trailing updates are
BLAS matrix products in floating point with delayed modular reduction;
_float_dtype picks float32 or float64 so that every intermediate
integer provably fits the mantissa, keeping the arithmetic exact.
Small matrices use a compiled single-pass elimination when numba is
available.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DomainError, JordanType, base_p_digits, check_prime
from .expr import Atom, Dual, ModuleExpr, Sum, Tensor, Twist, render_expr

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

try:
    from scipy.linalg import blas as _scipy_blas
except ImportError:  # pragma: no cover - scipy is a declared dependency
    _scipy_blas = None

DEFAULT_DIM_CAP = 4096

_SMALL = 600
_BLOCK = 128


class NotUnipotentError(DomainError):
    """The matrix is not unipotent with (M - I)^p = 0."""


class DimensionCapError(DomainError):
    """Expression dimension exceeds the configured oracle cap."""


@dataclass(frozen=True)
class FpMatrix:
    """Dense matrix over GF(p); entries are int64 residues in [0, p)."""

    array: np.ndarray
    p: int

    def __post_init__(self):
        check_prime(self.p)
        a = self.array
        if a.ndim != 2:
            raise DomainError(f"matrix must be 2-dimensional, got shape {a.shape}")
        if a.dtype != np.int64:
            raise DomainError(f"matrix entries must be int64, got {a.dtype}")
        if a.size and (a.min() < 0 or a.max() >= self.p):
            raise DomainError(f"entries must be residues in [0, {self.p})")

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]


def identity_matrix(n: int, p: int) -> FpMatrix:
    return FpMatrix(np.eye(n, dtype=np.int64), check_prime(p))


def pascal_matrix(m: int, p: int) -> FpMatrix:
    """Upper triangular Pascal matrix: entry (i, j) = C(j, i) mod p.

    This is the matrix of the unipotent [[1,1],[0,1]] acting on the m-th
    symmetric power of the natural 2-dimensional module, in the monomial
    basis.
    """
    check_prime(p)
    if m < 0:
        raise DomainError(f"degree must be >= 0, got {m}")
    P = np.zeros((m + 1, m + 1), dtype=np.int64)
    P[0] = 1
    for i in range(1, m + 1):
        # C(j, i) = C(j-1, i-1) + C(j-1, i): each row is a running sum of
        # the previous one, shifted right.
        P[i, i:] = np.cumsum(P[i - 1, i - 1:m]) % p
    return FpMatrix(P, p)


def kron(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    """Kronecker product; realizes a tensor product of modules."""
    if a.p != b.p:
        raise DomainError(f"mismatched characteristics {a.p} != {b.p}")
    return FpMatrix(np.kron(a.array, b.array) % a.p, a.p)


def direct_sum(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    """Block-diagonal sum; realizes a direct sum of modules."""
    if a.p != b.p:
        raise DomainError(f"mismatched characteristics {a.p} != {b.p}")
    out = np.zeros((a.rows + b.rows, a.cols + b.cols), dtype=np.int64)
    out[:a.rows, :a.cols] = a.array
    out[a.rows:, a.cols:] = b.array
    return FpMatrix(out, a.p)


# ---------------------------------------------------------------------------
# exact rank kernel


if _HAVE_NUMBA:

    @njit(cache=True)
    def _modinv(a, p):  # pragma: no cover - compiled
        inv = 1
        e = p - 2
        b = a
        while e:
            if e & 1:
                inv = (inv * b) % p
            b = (b * b) % p
            e >>= 1
        return inv

    @njit(cache=True)
    def _echelon_small_int(A, p, pivcols):  # pragma: no cover - compiled
        m, n = A.shape
        row = 0
        for col in range(n):
            if row >= m:
                break
            pr = -1
            for r in range(row, m):
                if A[r, col] % p != 0:
                    pr = r
                    break
            if pr < 0:
                continue
            if pr != row:
                for c in range(col, n):
                    t = A[row, c]
                    A[row, c] = A[pr, c]
                    A[pr, c] = t
            piv = A[row, col] % p
            inv = 1
            if piv != 1:
                inv = _modinv(piv, p)
            for c in range(col, n):
                A[row, c] = (A[row, c] * inv) % p
            for r in range(row + 1, m):
                f = A[r, col] % p
                if f:
                    fn = p - f
                    for c in range(col, n):
                        A[r, c] += fn * A[row, c]
            pivcols[row] = col
            row += 1
        for r in range(row):
            for c in range(n):
                A[r, c] %= p
        return row

    @njit(cache=True)
    def _panel_int(P, p, Lbuf, pivcols, swaps, scales):  # pragma: no cover
        """Eliminate a contiguous panel; record multipliers, pivot columns,
        row swaps and pivot-row scalings for the trailing update."""
        m, b = P.shape
        piv = 0
        nswap = 0
        for j in range(b):
            prow = piv
            if prow >= m:
                break
            pr = -1
            for r in range(prow, m):
                if P[r, j] % p != 0:
                    pr = r
                    break
            if pr < 0:
                continue
            if pr != prow:
                swaps[nswap, 0] = prow
                swaps[nswap, 1] = pr
                nswap += 1
                for c in range(b):
                    t = P[prow, c]
                    P[prow, c] = P[pr, c]
                    P[pr, c] = t
                for c in range(piv):
                    t = Lbuf[prow, c]
                    Lbuf[prow, c] = Lbuf[pr, c]
                    Lbuf[pr, c] = t
            pivval = P[prow, j] % p
            inv = 1
            if pivval != 1:
                inv = _modinv(pivval, p)
            scales[piv] = inv
            for c in range(j, b):
                P[prow, c] = (P[prow, c] * inv) % p
            for r in range(prow + 1, m):
                f = P[r, j] % p
                if f:
                    fn = p - f
                    Lbuf[r, piv] = f
                    for c in range(j, b):
                        P[r, c] += fn * P[prow, c]
            pivcols[piv] = j
            piv += 1
        return piv, nswap


def _echelon_blocked(A: np.ndarray, p: int, block: int = _BLOCK) -> tuple[np.ndarray, list[int]]:
    """Row-echelon row-space basis over GF(p), destroying A.

    A is a float array with integer values, not necessarily reduced.
    Each round consumes the leftmost `block` columns: eliminate them in
    a contiguous panel copy, resolve the pivot rows' trailing parts,
    then update the remaining rows with one BLAS product.  Off-panel
    values are only reduced mod p when extracted, which keeps every
    pass over the bulk a plain fused add/multiply.  Returns
    (rows, pivot column indices); the rows come out reduced.
    """
    m, n = A.shape
    done: list[np.ndarray] = []
    pivcols: list[int] = []
    active = np.ascontiguousarray(A)
    colbase = 0
    while active.shape[0] and active.shape[1]:
        ma, na = active.shape
        b = min(block, na)
        if _HAVE_NUMBA:
            P64 = np.asarray(np.rint(active[:, :b]), dtype=np.int64)
            Lbuf64 = np.zeros((ma, b), dtype=np.int64)
            pivbuf = np.zeros(b, dtype=np.int64)
            swapbuf = np.zeros((b, 2), dtype=np.int64)
            scale64 = np.ones(b, dtype=np.int64)
            piv, nswap = _panel_int(P64, p, Lbuf64, pivbuf, swapbuf, scale64)
            for s in range(nswap):
                i, k = int(swapbuf[s, 0]), int(swapbuf[s, 1])
                active[[i, k]] = active[[k, i]]
            P = P64.astype(A.dtype)
            Lbuf = Lbuf64.astype(A.dtype)
            scales = scale64.astype(np.float64)
            pivcols.extend(colbase + int(c) for c in pivbuf[:piv])
        else:
            P = active[:, :b].copy()
            Lbuf = np.zeros((ma, b), dtype=A.dtype)
            scales = np.ones(b)
            piv = 0
            for j in range(b):
                prow = piv
                if prow >= ma:
                    break
                colv = P[prow:, j] % p
                nz = np.nonzero(colv)[0]
                if nz.size == 0:
                    continue
                pr = prow + nz[0]
                if pr != prow:
                    P[[prow, pr]] = P[[pr, prow]]
                    Lbuf[[prow, pr]] = Lbuf[[pr, prow]]
                    active[[prow, pr]] = active[[pr, prow]]
                P[prow, j:] %= p
                pivot = int(P[prow, j])
                if pivot != 1:
                    inv = pow(pivot, -1, p)
                    scales[piv] = inv
                    P[prow, j:] = (P[prow, j:] * inv) % p
                f = colv[nz[0] + 1:] if pr == prow else (P[prow + 1:, j] % p)
                if f.size and np.any(f):
                    Lbuf[prow + 1:, piv] = f
                    P[prow + 1:, j:] -= np.outer(f, P[prow, j:])
                pivcols.append(colbase + j)
                piv += 1
        if b < na:
            T = active[:piv, b:] % p
            for k in range(piv):
                if k:
                    T[k] -= Lbuf[k, :k] @ T[:k]
                T[k] = (T[k] * scales[k]) % p
            for k in range(piv):
                full = np.zeros(n, dtype=A.dtype)
                full[colbase:colbase + b] = P[k] % p
                full[colbase + b:] = T[k]
                done.append(full)
            rest = Lbuf[piv:, :piv] @ T
            np.subtract(active[piv:, b:], rest, out=rest)
            active = rest
        else:
            for k in range(piv):
                full = np.zeros(n, dtype=A.dtype)
                full[colbase:colbase + b] = P[k] % p
                done.append(full)
            active = active[:0, :0]
        colbase += b
    if not done:
        return np.zeros((0, n), dtype=A.dtype), pivcols
    return np.array(done), pivcols


def _float_dtype(n: int, p: int):
    # Float arithmetic stays exact while every intermediate integer fits
    # the mantissa.  With delayed reduction the worst accumulation is
    # bounded by 2n(p-1)^2 (unreduced product plus panel updates) plus
    # b(p-1)^3 (pivot-row rescaling in the trailing resolve).
    bound = (2 * n + _BLOCK * (p - 1)) * (p - 1) ** 2
    if bound < 2 ** 23:
        return np.float32
    if bound < 2 ** 52:
        return np.float64
    raise DomainError(f"characteristic {p} too large for exact float elimination")


def _echelon(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Echelon row basis of A over GF(p) with its pivot columns.

    A holds integer values (reduced or not) and may be destroyed.  The
    pivot rows come out reduced and normalized, so R[:, pivcols] is
    unit upper triangular.
    """
    m, n = A.shape
    if m == 0 or n == 0 or not np.any(A):
        return np.zeros((0, n), dtype=A.dtype), []
    if _HAVE_NUMBA and max(m, n) <= _SMALL:
        B = np.asarray(np.rint(A), dtype=np.int64)
        pivbuf = np.zeros(min(m, n), dtype=np.int64)
        r = _echelon_small_int(B, p, pivbuf)
        return B[:r].astype(A.dtype), [int(c) for c in pivbuf[:r]]
    return _echelon_blocked(A.copy(), p)


def rank_mod_p(M: np.ndarray, p: int) -> int:
    """Exact rank of an integer matrix over GF(p)."""
    check_prime(p)
    A = np.asarray(M, dtype=np.int64) % p
    if A.size == 0:
        return 0
    return _echelon(A.astype(_float_dtype(max(A.shape), p)), p)[0].shape[0]


def _row_mul(R: np.ndarray, N: np.ndarray, triangular: bool) -> np.ndarray:
    """R @ N, through the half-flop triangular BLAS kernel when N is
    upper triangular (matrices of unipotents built here always are)."""
    if triangular and _scipy_blas is not None and R.shape[0]:
        trmm = _scipy_blas.strmm if R.dtype == np.float32 else _scipy_blas.dtrmm
        # R @ N == (N^T @ R^T)^T and the transposes are free F-order views
        return trmm(1.0, N.T, R.T, side=0, lower=1, trans_a=0, diag=0).T
    return R @ N


def rank_sequence(M: FpMatrix) -> list[int]:
    """Ranks [r_0, r_1, ..., r_d] of (M - I)^k, ending at the first zero.

    Raises NotUnipotentError unless (M - I)^p = 0.  Computed by iterating
    row spaces: rowspace(N^{k+1}) = rowspace(R N) for any row basis R of
    N^k, so only the first elimination runs at full size and every later
    level works on an r_k x n matrix.
    """
    n = M.rows
    if M.rows != M.cols:
        raise DomainError(f"matrix must be square, got {M.array.shape}")
    p = M.p
    dtype = _float_dtype(n, p)
    N = ((M.array - np.eye(n, dtype=np.int64)) % p).astype(dtype)
    triangular = bool(np.all(np.tril(N, -1) == 0))
    ranks = [n]
    R, _ = _echelon(N.copy(), p)
    while R.shape[0]:
        ranks.append(int(R.shape[0]))
        if len(ranks) - 1 >= p:
            raise NotUnipotentError(
                f"(M - I)^{p} != 0: element is not unipotent of order dividing {p}")
        # the product is left unreduced: the elimination reduces on use,
        # and _float_dtype guarantees the values stay exactly representable
        R, _ = _echelon(_row_mul(R, N, triangular), p)
    ranks.append(0)
    return ranks


def jordan_type_of_unipotent(M: FpMatrix) -> JordanType:
    """Exact Jordan type of a unipotent matrix with (M - I)^p = 0.

    The number of blocks of size >= k is rank((M-I)^{k-1}) - rank((M-I)^k),
    so the multiplicity of size k is r_{k-1} - 2 r_k + r_{k+1}.
    """
    return _partition_from_ranks(rank_sequence(M), M.p)


def _partition_from_ranks(ranks: list[int], p: int) -> JordanType:
    r = ranks + [0]
    pairs = []
    for k in range(1, len(ranks)):
        mult = r[k - 1] - 2 * r[k] + r[k + 1]
        if mult:
            pairs.append((k, mult))
    return JordanType.from_blocks(pairs, p)


# ---------------------------------------------------------------------------
# expression-level oracle


def expr_dim(e: ModuleExpr, p: int) -> int:
    """Dimension of a T-free expression (L and V atoms only)."""
    if isinstance(e, Atom):
        if e.kind == "L":
            digits = base_p_digits(e.weight, p)
            dim = 1
            for d in digits.digits:
                dim *= d + 1
            return dim
        if e.kind == "V":
            return e.weight + 1
        raise DomainError("tilting atoms have no oracle matrix model")
    if isinstance(e, Sum):
        return expr_dim(e.left, p) + expr_dim(e.right, p)
    if isinstance(e, Tensor):
        return expr_dim(e.left, p) * expr_dim(e.right, p)
    if isinstance(e, (Dual, Twist)):
        return expr_dim(e.inner, p)
    raise TypeError(f"not a module expression: {e!r}")


def expr_matrix(e: ModuleExpr, p: int, dim_cap: int = DEFAULT_DIM_CAP) -> FpMatrix:
    """Matrix of u on a T-free expression over the prime field.

    The unipotent element lies in SL2 of the prime field, so Frobenius
    twists and duals act as the identity on the matrix; both facts are
    property-tested rather than assumed silently.
    """
    check_prime(p)
    total = expr_dim(e, p)
    if total > dim_cap:
        raise DimensionCapError(
            f"expression dimension {total} exceeds the oracle cap {dim_cap}")
    return _build_matrix(e, p)


def _build_matrix(e: ModuleExpr, p: int) -> FpMatrix:
    if isinstance(e, Atom):
        if e.kind == "V":
            return pascal_matrix(e.weight, p)
        if e.kind == "L":
            digits = base_p_digits(e.weight, p)
            M = identity_matrix(1, p)
            for d in digits.digits:
                if d:
                    M = kron(M, pascal_matrix(d, p))
            return M
        raise DomainError("tilting atoms have no oracle matrix model")
    if isinstance(e, Sum):
        return direct_sum(_build_matrix(e.left, p), _build_matrix(e.right, p))
    if isinstance(e, Tensor):
        return kron(_build_matrix(e.left, p), _build_matrix(e.right, p))
    if isinstance(e, (Dual, Twist)):
        return _build_matrix(e.inner, p)
    raise TypeError(f"not a module expression: {e!r}")


def oracle_eval(e: ModuleExpr, p: int, dim_cap: int = DEFAULT_DIM_CAP) -> JordanType:
    """Jordan type of a T-free expression by explicit rank computations."""
    return jordan_type_of_unipotent(expr_matrix(e, p, dim_cap))


def oracle_certificate(e: ModuleExpr, p: int, dim_cap: int = DEFAULT_DIM_CAP) -> dict:
    """Audit record for a verified expression: the rank sequence is the
    raw evidence the Jordan type is derived from."""
    M = expr_matrix(e, p, dim_cap)
    ranks = rank_sequence(M)
    jt = _partition_from_ranks(ranks, p)
    return {
        "expr": render_expr(e),
        "p": p,
        "dim": M.rows,
        "ranks": ranks,
        "jordan": jt.as_pairs(),
    }
