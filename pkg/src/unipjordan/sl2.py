"""Closed-form Jordan types of an order-p unipotent element on SL2 modules.

The unipotent element u is a non-identity unipotent of SL2 over an
algebraically closed field of characteristic p; it has order p, so every
Jordan block has size at most p.  The block data of the basic modules:

* tensor products of single blocks decompose by the h/N closed form
  (h = min(m, p-n), N = max(0, m+n-p) for 1 <= m <= n <= p);
* the Weyl module of highest weight m = qp + r restricts as
  q.J_p + J_{r+1};
* the irreducible of highest weight lambda factors through its base-p
  digits, one block J_{digit+1} per digit, tensored together (Frobenius
  twists do not move Jordan blocks);
* the indecomposable tilting module of highest weight c >= p-1 is free,
  i.e. dim/p copies of J_p; its dimension comes from the two base cases
  (c <= p-1 irreducible; p <= c <= 2p-2 uniserial of dimension 2p) and
  the tensor-twist recursion T(c) = T(p-1+r) (x) T(s)^[1] for
  c = sp + (p-1+r).

Everything here is cross-checked against the finite-field matrix oracle
in :mod:`unipjordan.oracle` by the test suite.
"""

from __future__ import annotations

import functools
from typing import NamedTuple

from .characters import (
    Character,
    char_add,
    char_dim,
    char_dual,
    char_tensor,
    char_twist,
    weyl_character,
)
from .core import DomainError, JordanType, base_p_digits, check_prime
from .expr import Atom, Dual, ModuleExpr, Sum, Tensor, Twist


def tensor_jordan(m: int, n: int, p: int) -> JordanType:
    """Jordan type of J_m (x) J_n in characteristic p.

    Accepts the block sizes in either order; both must lie in [1, p].
    The result is sum_{i<h} J_{n-m+2i+1} + N.J_p with h = min(m, p-n)
    and N = max(0, m+n-p); its dimension is m*n.
    """
    check_prime(p)
    m, n = sorted((m, n))
    if m < 1 or n > p:
        raise DomainError(f"block sizes must be within [1, {p}]: got ({m}, {n})")
    h = min(m, p - n)
    big = max(0, m + n - p)
    pairs = [(n - m + 2 * i + 1, 1) for i in range(h)]
    if big:
        pairs.append((p, big))
    t = JordanType.from_blocks(pairs, p)
    assert t.dim == m * n
    return t


def tensor_jordan_types(a: JordanType, b: JordanType) -> JordanType:
    """Bilinear extension of tensor_jordan to whole Jordan types.

    Valid because u acts diagonally on a tensor product, so the type of
    (A (x) B) is the multiset union over all block pairs.
    """
    if a.p != b.p:
        raise DomainError(f"mismatched characteristics {a.p} != {b.p}")
    acc: dict[int, int] = {}
    for s1, m1 in a.blocks:
        for s2, m2 in b.blocks:
            for sz, mult in tensor_jordan(s1, s2, a.p).blocks:
                acc[sz] = acc.get(sz, 0) + mult * m1 * m2
    return JordanType.from_blocks(acc.items(), a.p)


def weyl_jordan(m: int, p: int) -> JordanType:
    """Jordan type of the Weyl module of highest weight m: for m = qp + r,
    q blocks of size p and one of size r+1."""
    check_prime(p)
    if m < 0:
        raise DomainError(f"dominant weight must be >= 0, got {m}")
    q, r = divmod(m, p)
    return JordanType.from_blocks([(p, q), (r + 1, 1)], p)


def irrep_jordan(lam: int, p: int) -> JordanType:
    """Jordan type of the irreducible of highest weight lambda.

    The irreducible factors into Frobenius twists of the restricted
    irreducibles given by the base-p digits; twists leave Jordan types
    unchanged, so the type is the tensor fold of J_{digit+1}.
    """
    digits = base_p_digits(lam, p)
    t = JordanType.from_blocks([(1, 1)], p)
    for d in digits.digits:
        if d:
            t = tensor_jordan_types(t, JordanType.from_blocks([(d + 1, 1)], p))
    return t


def irrep_char(lam: int, p: int) -> Character:
    """Character of the irreducible of highest weight lambda, via the
    digit factorization (twists scale weights by p^i)."""
    digits = base_p_digits(lam, p)
    ch = weyl_character(0)
    for i, d in enumerate(digits.digits):
        if d:
            factor = weyl_character(d)
            if i:
                factor = char_twist(factor, i, p)
            ch = char_tensor(ch, factor)
    return ch


@functools.lru_cache(maxsize=None)
def tilting_char(c: int, p: int) -> Character:
    """Character of the indecomposable tilting module of highest weight c.

    Base cases: irreducible for c <= p-1; sum of the two Weyl characters
    ch V(c) + ch V(2p-2-c) for p <= c <= 2p-2.  Above that, the
    tensor-twist recursion with c = sp + (p-1+r), 0 <= r <= p-1, s >= 1.
    The memo table is an idempotent cache, safe under concurrent insert.
    """
    check_prime(p)
    if c < 0:
        raise DomainError(f"dominant weight must be >= 0, got {c}")
    if c <= p - 1:
        return weyl_character(c)
    if c <= 2 * p - 2:
        return char_add(weyl_character(c), weyl_character(2 * p - 2 - c))
    s, r = divmod(c - (p - 1), p)
    return char_tensor(tilting_char(p - 1 + r, p), char_twist(tilting_char(s, p), 1, p))


def tilting_dim(c: int, p: int) -> int:
    return char_dim(tilting_char(c, p))


def tilting_jordan(c: int, p: int) -> JordanType:
    """Jordan type of the tilting module: J_{c+1} when it is irreducible
    (c <= p-1); free of rank dim/p otherwise."""
    check_prime(p)
    if c < 0:
        raise DomainError(f"dominant weight must be >= 0, got {c}")
    if c <= p - 1:
        return JordanType.from_blocks([(c + 1, 1)], p)
    dim = tilting_dim(c, p)
    big, rem = divmod(dim, p)
    if rem:
        raise RuntimeError(
            f"tilting dimension {dim} not divisible by p={p} at c={c}: implementation bug")
    return JordanType.from_blocks([(p, big)], p)


class EvalResult(NamedTuple):
    character: Character
    dim: int
    jordan: JordanType


def eval_expr(e: ModuleExpr, p: int) -> EvalResult:
    """Character, dimension and Jordan type of a module expression.

    Structural recursion: sums are disjoint unions, tensors convolve
    characters and tensor the Jordan types, duals are the identity on
    both, twists scale character weights and fix the Jordan type.
    """
    check_prime(p)
    ch, jt = _eval(e, p)
    if ch.dim != jt.dim:
        raise RuntimeError(
            f"character/Jordan dimension mismatch {ch.dim} != {jt.dim} on {e!r}: bug")
    return EvalResult(ch, ch.dim, jt)


def _eval(e: ModuleExpr, p: int) -> tuple[Character, JordanType]:
    if isinstance(e, Atom):
        if e.kind == "L":
            return irrep_char(e.weight, p), irrep_jordan(e.weight, p)
        if e.kind == "V":
            return weyl_character(e.weight), weyl_jordan(e.weight, p)
        return tilting_char(e.weight, p), tilting_jordan(e.weight, p)
    if isinstance(e, Sum):
        ch1, j1 = _eval(e.left, p)
        ch2, j2 = _eval(e.right, p)
        return char_add(ch1, ch2), j1.add(j2)
    if isinstance(e, Tensor):
        ch1, j1 = _eval(e.left, p)
        ch2, j2 = _eval(e.right, p)
        return char_tensor(ch1, ch2), tensor_jordan_types(j1, j2)
    if isinstance(e, Dual):
        ch, jt = _eval(e.inner, p)
        return char_dual(ch), jt
    if isinstance(e, Twist):
        ch, jt = _eval(e.inner, p)
        return char_twist(ch, e.l, p), jt
    raise TypeError(f"not a module expression: {e!r}")
