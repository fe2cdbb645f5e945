"""Root systems, the Weyl dimension formula, and quasi-minuscule data.

Root systems are built from explicit simple-root coordinate tables in
the standard (Bourbaki) ordering rather than by Cartan-matrix closure.
Types F4 and E6/E7/E8 natively use half-integral coordinates; those
coordinate systems are scaled by 2 so every root is an integer vector
(the Weyl dimension formula only uses scale-invariant ratios).  E7 and
E6 are realized inside the E8 lattice as the spans of the first 7 and 6
simple roots.

The quasi-minuscule weight of a system is its highest short root; its
Weyl module carries zero, one or two trivial composition factors
depending on (type, rank, p), and the corresponding tilting module adds
the same number of trivials on top.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import DomainError, check_prime

RANK_BOUNDS = {"A": (1, None), "B": (2, None), "C": (2, None), "D": (4, None),
               "E": (6, 8), "F": (4, 4), "G": (2, 2)}

POSITIVE_ROOT_COUNTS = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
    "E": lambda l: {6: 36, 7: 63, 8: 120}[l],
    "F": lambda l: 24,
    "G": lambda l: 6,
}


def _e(i, dim, scale=1):
    v = [0] * dim
    v[i] = scale
    return v


def _simple_roots(letter: str, rank: int) -> list[list[int]]:
    l = rank
    if letter == "A":
        return [[int(k == i) - int(k == i + 1) for k in range(l + 1)] for i in range(l)]
    if letter == "B":
        out = [[int(k == i) - int(k == i + 1) for k in range(l)] for i in range(l - 1)]
        out.append(_e(l - 1, l))
        return out
    if letter == "C":
        out = [[int(k == i) - int(k == i + 1) for k in range(l)] for i in range(l - 1)]
        out.append(_e(l - 1, l, 2))
        return out
    if letter == "D":
        out = [[int(k == i) - int(k == i + 1) for k in range(l)] for i in range(l - 1)]
        last = [0] * l
        last[l - 2] = 1
        last[l - 1] = 1
        out.append(last)
        return out
    if letter == "G":
        return [[1, -1, 0], [-2, 1, 1]]
    if letter == "F":  # doubled coordinates
        return [[0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 0, 2], [1, -1, -1, -1]]
    if letter == "E":  # doubled E8 coordinates, first `rank` simple roots
        e8 = [
            [1, -1, -1, -1, -1, -1, -1, 1],
            [2, 2, 0, 0, 0, 0, 0, 0],
            [-2, 2, 0, 0, 0, 0, 0, 0],
            [0, -2, 2, 0, 0, 0, 0, 0],
            [0, 0, -2, 2, 0, 0, 0, 0],
            [0, 0, 0, -2, 2, 0, 0, 0],
            [0, 0, 0, 0, -2, 2, 0, 0],
            [0, 0, 0, 0, 0, -2, 2, 0],
        ]
        return e8[:rank]
    raise DomainError(f"unknown type {letter!r}")


def _all_roots(letter: str, rank: int) -> list[list[int]]:
    l = rank
    roots = []
    if letter == "A":
        for i in range(l + 1):
            for j in range(l + 1):
                if i != j:
                    v = [0] * (l + 1)
                    v[i] = 1
                    v[j] = -1
                    roots.append(v)
    elif letter in ("B", "C", "D"):
        for i in range(l):
            for j in range(i + 1, l):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [0] * l
                        v[i] = si
                        v[j] = sj
                        roots.append(v)
        if letter == "B":
            for i in range(l):
                for s in (1, -1):
                    roots.append(_e(i, l, s))
        elif letter == "C":
            for i in range(l):
                for s in (1, -1):
                    roots.append(_e(i, l, 2 * s))
    elif letter == "G":
        pairs = [(0, 1), (1, 2), (0, 2)]
        for i, j in pairs:
            v = [0, 0, 0]
            v[i] = 1
            v[j] = -1
            roots.append(v)
            roots.append([-x for x in v])
        for i in range(3):
            v = [-1, -1, -1]
            v[i] = 2
            roots.append(v)
            roots.append([-x for x in v])
    elif letter == "F":  # doubled
        for i in range(4):
            for s in (2, -2):
                roots.append(_e(i, 4, s))
        for i in range(4):
            for j in range(i + 1, 4):
                for si in (2, -2):
                    for sj in (2, -2):
                        v = [0] * 4
                        v[i] = si
                        v[j] = sj
                        roots.append(v)
        for signs in itertools.product((1, -1), repeat=4):
            roots.append(list(signs))
    elif letter == "E":  # doubled E8 root set; subsystems filtered later
        for i in range(8):
            for j in range(i + 1, 8):
                for si in (2, -2):
                    for sj in (2, -2):
                        v = [0] * 8
                        v[i] = si
                        v[j] = sj
                        roots.append(v)
        for signs in itertools.product((1, -1), repeat=8):
            if signs.count(-1) % 2 == 0:
                roots.append(list(signs))
    else:
        raise DomainError(f"unknown type {letter!r}")
    return roots


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system data in Bourbaki simple-root order.

    positive_roots[i] is an integer coordinate vector;
    positive_coeffs[i] its non-negative integer coefficients on the
    simple roots; norms are squared lengths in the (possibly scaled)
    coordinate system.
    """

    letter: str
    rank: int
    simple_roots: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    positive_coeffs: tuple[tuple[int, ...], ...]
    simple_norms: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def root_norm(self, idx: int) -> int:
        v = self.positive_roots[idx]
        return sum(x * x for x in v)


def parse_group_name(name: str) -> tuple[str, int]:
    name = name.strip()
    if len(name) < 2 or name[0].upper() not in RANK_BOUNDS:
        raise DomainError(f"bad group name {name!r} (expected e.g. 'E6', 'B3')")
    try:
        rank = int(name[1:])
    except ValueError as exc:
        raise DomainError(f"bad group name {name!r}") from exc
    return name[0].upper(), rank


@lru_cache(maxsize=None)
def root_system(letter: str, rank: int) -> RootSystem:
    """Construct (and cache) the root system of the given type."""
    letter = letter.upper()
    if letter not in RANK_BOUNDS:
        raise DomainError(f"unknown type {letter!r}")
    lo, hi = RANK_BOUNDS[letter]
    if rank < lo or (hi is not None and rank > hi):
        raise DomainError(f"rank {rank} out of range for type {letter}")

    simple = _simple_roots(letter, rank)
    candidates = _all_roots(letter, rank)
    S = np.array(simple, dtype=float).T  # ambient_dim x rank

    positives = []
    coeffs = []
    for v in candidates:
        sol, *_ = np.linalg.lstsq(S, np.array(v, dtype=float), rcond=None)
        c = np.rint(sol).astype(int)
        if not np.array_equal(S.astype(int) @ c, np.array(v)):
            continue  # not in the span (E6/E7 inside the E8 set)
        if all(x >= 0 for x in c):
            positives.append(tuple(v))
            coeffs.append(tuple(int(x) for x in c))
        elif not all(x <= 0 for x in c):
            raise RuntimeError(f"mixed-sign root coefficients for {v}: bug")

    expected = POSITIVE_ROOT_COUNTS[letter](rank)
    if len(positives) != expected:
        raise RuntimeError(
            f"{letter}{rank}: found {len(positives)} positive roots, expected {expected}")
    norms = tuple(sum(x * x for x in s) for s in simple)
    return RootSystem(letter, rank, tuple(tuple(s) for s in simple),
                      tuple(positives), tuple(coeffs), norms)


def weyl_dim(rs: RootSystem, weight: tuple[int, ...]) -> int:
    """Weyl dimension formula in exact rational arithmetic.

    ``weight`` holds the coefficients of the fundamental weights.  For a
    positive root a = sum n_j a_j, the pairing <w_i, a^> equals
    n_i |a_i|^2 / |a|^2, so every factor is a ratio of small integers.
    """
    if len(weight) != rs.rank:
        raise DomainError(f"weight has {len(weight)} coordinates, rank is {rs.rank}")
    if any(c < 0 for c in weight):
        raise DomainError(f"weight must be dominant (non-negative), got {weight}")
    num = Fraction(1)
    for idx, coeff in enumerate(rs.positive_coeffs):
        norm = rs.root_norm(idx)
        lam_plus_rho = sum((weight[j] + 1) * coeff[j] * rs.simple_norms[j]
                           for j in range(rs.rank))
        rho = sum(coeff[j] * rs.simple_norms[j] for j in range(rs.rank))
        num *= Fraction(lam_plus_rho, norm) / Fraction(rho, norm)
    if num.denominator != 1:
        raise RuntimeError(f"Weyl dimension came out non-integral: {num}")
    return int(num)


def quasi_minuscule_weight(rs: RootSystem) -> tuple[int, ...]:
    """The quasi-minuscule weight: the highest short root, in
    fundamental-weight coordinates."""
    min_norm = min(rs.root_norm(i) for i in range(rs.num_positive_roots))
    best = None
    best_height = -1
    for i in range(rs.num_positive_roots):
        if rs.root_norm(i) != min_norm:
            continue
        height = sum(rs.positive_coeffs[i])
        if height > best_height:
            best_height = height
            best = rs.positive_roots[i]
    # express in fundamental weights: c_i = 2 <a, a_i> / |a_i|^2
    out = []
    for j in range(rs.rank):
        sj = rs.simple_roots[j]
        dot = sum(x * y for x, y in zip(best, sj))
        c = Fraction(2 * dot, rs.simple_norms[j])
        if c.denominator != 1 or c < 0:
            raise RuntimeError(f"highest short root not dominant-integral: {best}")
        out.append(int(c))
    return tuple(out)


def weight_name(weight: tuple[int, ...]) -> str:
    parts = []
    for i, c in enumerate(weight, start=1):
        if c == 1:
            parts.append(f"w{i}")
        elif c > 1:
            parts.append(f"{c}*w{i}")
    return "+".join(parts) if parts else "0"


def _trivial_count(rs: RootSystem, p: int) -> int:
    """Number of trivial composition factors of the quasi-minuscule Weyl
    module, by type and characteristic."""
    l = rs.rank
    letter = rs.letter
    if letter == "A":
        return 1 if (l + 1) % p == 0 else 0
    if letter == "B":
        return 1 if p == 2 else 0
    if letter == "C":
        return 1 if l % p == 0 else 0
    if letter == "D":
        if p != 2:
            return 0
        return 2 if l % 2 == 0 else 1
    if letter == "G":
        return 1 if p == 2 else 0
    if letter == "F":
        return 1 if p == 3 else 0
    if letter == "E":
        if rs.rank == 6:
            return 1 if p == 3 else 0
        if rs.rank == 7:
            return 1 if p == 2 else 0
        return 0
    raise DomainError(f"unknown type {letter!r}")


STRUCTURE_NAMES = {0: "Irreducible", 1: "OneTrivial", 2: "TwoTrivial"}


@dataclass(frozen=True)
class QmStructure:
    """Structure of the quasi-minuscule Weyl and tilting modules."""

    group: str
    p: int
    weight: tuple[int, ...]
    weight_name: str
    weyl_structure: str      # Irreducible | OneTrivial | TwoTrivial
    weyl_series: str
    tilting_series: str
    dim_weyl: int
    dim_simple: int
    dim_tilting: int


def qm_structure(rs: RootSystem, p: int) -> QmStructure:
    """Weyl/simple/tilting dimensions and socle series at the
    quasi-minuscule weight, in characteristic p."""
    check_prime(p)
    weight = quasi_minuscule_weight(rs)
    dim_v = weyl_dim(rs, weight)
    t = _trivial_count(rs, p)
    name = weight_name(weight)
    lam = f"L({name})"
    if t == 0:
        weyl_series = lam
        tilt_series = lam
    elif t == 1:
        weyl_series = f"{lam} | L(0)"
        tilt_series = f"L(0) | {lam} | L(0)"
    else:
        weyl_series = f"{lam} | L(0)^2"
        tilt_series = f"L(0)^2 | {lam} | L(0)^2"
    return QmStructure(
        group=rs.name, p=p, weight=weight, weight_name=name,
        weyl_structure=STRUCTURE_NAMES[t],
        weyl_series=weyl_series, tilting_series=tilt_series,
        dim_weyl=dim_v, dim_simple=dim_v - t, dim_tilting=dim_v + t,
    )


def adjoint_dimension(letter: str, rank: int) -> int:
    """Dimension of the adjoint module: root count plus rank."""
    rs = root_system(letter, rank)
    return 2 * rs.num_positive_roots + rs.rank


MINIMAL_MODULE_DIMS = {"G2": 7, "F4": 26, "E6": 27, "E7": 56, "E8": 248}


def module_dimension(letter: str, rank: int, tag: str) -> int:
    """Dimension of a tagged module used for class-table validation."""
    if tag == "adjoint":
        return adjoint_dimension(letter, rank)
    if tag == "natural":
        if letter == "A":
            return rank + 1
        if letter == "B":
            return 2 * rank + 1
        if letter in ("C", "D"):
            return 2 * rank
        raise DomainError(f"no natural module tag for type {letter}")
    if tag == "minimal":
        name = f"{letter}{rank}"
        if name in MINIMAL_MODULE_DIMS:
            return MINIMAL_MODULE_DIMS[name]
        raise DomainError(f"no tabulated minimal module for {name}")
    raise DomainError(f"unknown module tag {tag!r}")
