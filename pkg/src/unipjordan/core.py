"""Core domain types: Jordan types and base-p digit vectors.

A Jordan type is a multiset of Jordan block sizes together with the
prime characteristic it lives in.  Canonical form is sorted descending
by size with multiplicities merged, rendered as ``"5^15 1^3"`` (the
exponent is omitted when the multiplicity is 1).  That rendering is the
serialization used everywhere else (JSON output, class tables), so it is
kept stable.
"""

from __future__ import annotations

from dataclasses import dataclass


class DomainError(ValueError):
    """Invalid input to one of the calculus operations."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    """Validate the characteristic once at an entry point."""
    if not isinstance(p, int) or not is_prime(p):
        raise DomainError(f"characteristic must be a prime, got {p!r}")
    return p


@dataclass(frozen=True)
class JordanType:
    """Multiset of Jordan block sizes of a unipotent element.

    ``blocks`` is stored canonically as a tuple of (size, multiplicity)
    pairs, sizes strictly decreasing, multiplicities >= 1.  ``p`` is the
    ambient prime characteristic.  Block sizes of the order-p calculus
    never exceed p; types coming from unipotent elements of higher order
    (as in the classical-group criteria) may have larger blocks, so the
    constructor only enforces size >= 1.
    """

    blocks: tuple[tuple[int, int], ...]
    p: int

    def __post_init__(self):
        check_prime(self.p)
        sizes = [s for s, _ in self.blocks]
        if any(s < 1 for s in sizes):
            raise DomainError(f"block sizes must be >= 1: {self.blocks}")
        if any(m < 1 for _, m in self.blocks):
            raise DomainError(f"multiplicities must be >= 1: {self.blocks}")
        if sorted(set(sizes), reverse=True) != sizes:
            raise DomainError(f"blocks must be canonical (descending, merged): {self.blocks}")

    @classmethod
    def from_blocks(cls, pairs, p: int) -> "JordanType":
        """Build from any iterable of (size, multiplicity) pairs."""
        acc: dict[int, int] = {}
        for s, m in pairs:
            if m:
                acc[int(s)] = acc.get(int(s), 0) + int(m)
        canon = tuple(sorted(acc.items(), reverse=True))
        return cls(canon, p)

    @classmethod
    def from_sizes(cls, sizes, p: int) -> "JordanType":
        return cls.from_blocks(((s, 1) for s in sizes), p)

    @property
    def dim(self) -> int:
        return sum(s * m for s, m in self.blocks)

    @property
    def num_blocks(self) -> int:
        """Number of blocks counted with multiplicity."""
        return sum(m for _, m in self.blocks)

    def multiplicity(self, size: int) -> int:
        for s, m in self.blocks:
            if s == size:
                return m
        return 0

    @property
    def size_p_multiplicity(self) -> int:
        """Number of blocks of size exactly p."""
        return self.multiplicity(self.p)

    @property
    def max_size(self) -> int:
        return self.blocks[0][0] if self.blocks else 0

    def sizes(self) -> list[int]:
        """Block sizes expanded with multiplicity, descending."""
        out = []
        for s, m in self.blocks:
            out.extend([s] * m)
        return out

    def add(self, other: "JordanType") -> "JordanType":
        """Direct sum of Jordan types."""
        if other.p != self.p:
            raise DomainError(f"mismatched characteristics {self.p} != {other.p}")
        return JordanType.from_blocks(self.blocks + other.blocks, self.p)

    def __str__(self) -> str:
        if not self.blocks:
            return "0"
        return " ".join(f"{s}^{m}" if m > 1 else str(s) for s, m in self.blocks)

    def as_pairs(self) -> list[list[int]]:
        """[[size, mult], ...] descending: the JSON serialization."""
        return [[s, m] for s, m in self.blocks]


def parse_partition(text: str, p: int) -> JordanType:
    """Parse a partition in any of the accepted command-line forms.

    Accepts "15 9 3", "15,9,3" and "5^15 1^3" (mixed tokens allowed);
    a token "s^m" contributes m blocks of size s.
    """
    check_prime(p)
    tokens = text.replace(",", " ").split()
    if not tokens:
        return JordanType((), p)
    pairs = []
    for tok in tokens:
        try:
            if "^" in tok:
                s_str, m_str = tok.split("^", 1)
                pairs.append((int(s_str), int(m_str)))
            else:
                pairs.append((int(tok), 1))
        except ValueError as exc:
            raise DomainError(f"bad partition token {tok!r} in {text!r}") from exc
    for s, m in pairs:
        if s < 1 or m < 1:
            raise DomainError(f"bad partition token ({s}^{m}) in {text!r}")
    return JordanType.from_blocks(pairs, p)


@dataclass(frozen=True)
class DigitVector:
    """Base-p digit expansion of a dominant weight, least significant first.

    Trailing zeros are stripped; the empty sequence encodes the weight 0.
    """

    digits: tuple[int, ...]
    p: int

    def __post_init__(self):
        check_prime(self.p)
        if any(d < 0 or d >= self.p for d in self.digits):
            raise DomainError(f"digits out of range [0, {self.p - 1}]: {self.digits}")
        if self.digits and self.digits[-1] == 0:
            raise DomainError(f"digit vector not canonical (trailing zero): {self.digits}")

    def weight(self) -> int:
        """Reconstruct the weight sum(digits[i] * p^i)."""
        w = 0
        for d in reversed(self.digits):
            w = w * self.p + d
        return w

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, i: int) -> int:
        """Digit at position i, zero beyond the stored length."""
        return self.digits[i] if 0 <= i < len(self.digits) else 0


def base_p_digits(n: int, p: int) -> DigitVector:
    """Canonical base-p digits of a non-negative integer."""
    check_prime(p)
    if n < 0:
        raise DomainError(f"weight must be non-negative, got {n}")
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return DigitVector(tuple(digits), p)


def nu_p(n: int, p: int) -> int:
    """Largest k with p^k dividing n (n >= 1)."""
    if n <= 0:
        raise DomainError(f"p-adic valuation needs a positive integer, got {n}")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k
