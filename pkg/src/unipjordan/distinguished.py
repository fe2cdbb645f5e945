"""Distinguishedness of unipotent Jordan types in SL(V), Sp(V), SO(V).

In odd characteristic the Jordan type decides everything: a single full
block for SL; distinct even block sizes for Sp; distinct odd block sizes
for SO.  In characteristic two the criterion for Sp/SO quantifies over
orthogonal decompositions, which the Jordan type alone does not encode:
all sizes even with every multiplicity at most two is necessary, and
certifies the class only together with an orthogonal decomposition.  The
verdict therefore carries a ``requires_orthogonal_witness`` flag, cleared
when the block sizes are distinct (then a decomposition always exists)
or when the caller attests to one.

Types here may come from elements of order p^t > p, so block sizes are
not bounded by p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DomainError, JordanType, check_prime

GROUPS = ("SL", "Sp", "SO")


@dataclass(frozen=True)
class DistinguishedVerdict:
    distinguished: bool
    reason: str
    requires_orthogonal_witness: bool = False

    def __bool__(self) -> bool:
        return self.distinguished


def distinct_even_orthogonality_note(t: JordanType) -> bool:
    """True when all block sizes are even with multiplicity one: in
    characteristic two this alone guarantees an orthogonal decomposition
    into single blocks, hence distinguishedness in Sp/SO."""
    return all(s % 2 == 0 and m == 1 for s, m in t.blocks)


def is_distinguished(group: str, p: int, t: JordanType, space_dim: int,
                     orthogonal_witness: bool = False) -> DistinguishedVerdict:
    """Distinguishedness of a unipotent element with Jordan type t.

    For SO or Sp at p = 2 with odd space_dim, t must be the type on the
    quotient Z = V / V^perp (dimension space_dim - 1); in every other
    case t is the type on V itself.  ``orthogonal_witness`` is the
    caller's attestation that the stated type admits an orthogonal
    decomposition (only relevant at p = 2 with repeated sizes).
    """
    check_prime(p)
    if group not in GROUPS:
        raise DomainError(f"group must be one of {GROUPS}, got {group!r}")
    if space_dim < 1:
        raise DomainError(f"space dimension must be positive, got {space_dim}")

    if group == "Sp" and space_dim % 2:
        raise DomainError(f"Sp needs an even-dimensional space, got {space_dim}")

    expected = space_dim
    if p == 2 and group in ("Sp", "SO") and space_dim % 2:
        expected = space_dim - 1  # type lives on Z = V / V^perp
    if t.dim != expected:
        raise DomainError(
            f"type has dimension {t.dim}, expected {expected} for {group}_{space_dim}")

    if group == "SL":
        if t.blocks == ((space_dim, 1),):
            return DistinguishedVerdict(True, f"single full block J_{space_dim}")
        return DistinguishedVerdict(False, "not a single full Jordan block")

    if p != 2:
        parity = 0 if group == "Sp" else 1
        parity_name = "even" if group == "Sp" else "odd"
        for s, m in t.blocks:
            if s % 2 != parity:
                return DistinguishedVerdict(False, f"block size {s} is not {parity_name}")
            if m > 1:
                return DistinguishedVerdict(False, f"block size {s} repeats (multiplicity {m})")
        return DistinguishedVerdict(True, f"distinct {parity_name} block sizes")

    # p = 2, Sp or SO
    for s, m in t.blocks:
        if s % 2:
            return DistinguishedVerdict(False, f"block size {s} is not even")
        if m > 2:
            return DistinguishedVerdict(False, f"multiplicity {m} > 2 for block size {s}")
    needs_witness = not distinct_even_orthogonality_note(t) and not orthogonal_witness
    reason = "even block sizes with multiplicity <= 2"
    if needs_witness:
        reason += " (orthogonal decomposition must be supplied externally)"
    return DistinguishedVerdict(True, reason, requires_orthogonal_witness=needs_witness)


def lift_quotient_to_orthogonal(quotient: JordanType, p: int = 2) -> JordanType:
    """Type on V from the type on <v>^perp / <v> for a stabilized
    non-singular vector v in an even-dimensional quadratic space, p = 2.

    With t blocks in the quotient (counted with multiplicity), the lift
    appends J_1 + J_1 when t is even and J_2 when t is odd; the total
    number of blocks stays even and the dimension grows by 2.
    """
    if p != 2:
        raise DomainError("the stabilizer lift is a characteristic-2 statement")
    if quotient.p != 2:
        raise DomainError(f"quotient type lives in characteristic {quotient.p}, not 2")
    nblocks = quotient.num_blocks
    extra = [(2, 1)] if nblocks % 2 else [(1, 2)]
    return JordanType.from_blocks(tuple(quotient.blocks) + tuple(extra), 2)


def bminus1_family(l: int) -> tuple[JordanType, JordanType]:
    """Regular-element data for the stabilizer of a non-singular vector in
    a 2l-dimensional quadratic space at p = 2 (a group of type B_{l-1}):
    the quotient type {J_{2l-2}} and its lift {J_2, J_{2l-2}}.

    The lift is distinguished in Sp_{2l}: for l > 2 the two sizes are
    distinct and even; for l = 2 it is J_2 twice, multiplicity 2 <= 2.
    """
    if l < 2:
        raise DomainError(f"rank parameter must be >= 2, got {l}")
    quotient = JordanType.from_blocks([(2 * l - 2, 1)], 2)
    return quotient, lift_quotient_to_orthogonal(quotient)
