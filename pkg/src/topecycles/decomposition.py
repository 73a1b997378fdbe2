"""The unique inclusion-minimal subset of cycle vertices summing to a tope,
plus the exhaustive oracle that cross-checks it."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .core import DimensionError, IntVector, SignVector, check_sign_vector, sign_vector_str
from .cycles import SymmetricCycle


class DecompositionError(ValueError):
    """The vertex sequence cannot decompose topes; it is not a genuine symmetric cycle."""


class SingularBasisError(DecompositionError):
    pass


class NonIntegralSolutionError(DecompositionError):
    pass


@dataclass(frozen=True)
class Decomposition:
    """tope == sum of members.  coeffs index the first half of the cycle:
    c_i = +1 selects R^i, c_i = -1 selects the antipode R^(i+t), c_i = 0 neither."""

    tope: SignVector
    cycle: SymmetricCycle
    coeffs: tuple[int, ...]
    members: tuple[SignVector, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@lru_cache(maxsize=64)
def _basis_inverse(cycle: SymmetricCycle) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of the t x t matrix whose columns are the first t cycle vertices.

    Gauss-Jordan with partial pivoting on absolute rational value.  Any
    sequence satisfying the cycle invariants has a nonsingular first half
    (sign-normalizing rows and reordering by flip step leaves a staircase
    matrix), so SingularBasisError can only signal malformed input.
    """
    t = cycle.t
    a = [
        [Fraction(cycle.vertices[i][e]) for i in range(t)]
        + [Fraction(1 if i == e else 0) for i in range(t)]
        for e in range(t)
    ]
    for col in range(t):
        pivot = max(range(col, t), key=lambda r: abs(a[r][col]))
        if a[pivot][col] == 0:
            raise SingularBasisError("first-half cycle vertices are linearly dependent")
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(t):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[t:]) for row in a)


def decompose(tope: Sequence[int], cycle: SymmetricCycle) -> Decomposition:
    """Solve for the unique representation of the tope over the cycle's first-half
    basis and assemble the member set it selects."""
    T = tuple(tope)
    check_sign_vector(T)
    if len(T) != cycle.t:
        raise DimensionError(f"tope length {len(T)} does not match cycle ground set t={cycle.t}")
    inv = _basis_inverse(cycle)
    coeffs = []
    for i in range(cycle.t):
        c = sum(inv[i][e] * T[e] for e in range(cycle.t))
        if c not in (-1, 0, 1):
            raise NonIntegralSolutionError(
                f"coefficient {c} outside {{-1,0,1}}: vertex sequence is not a symmetric cycle of a simple oriented matroid"
            )
        coeffs.append(int(c))
    idx = sorted(i if c > 0 else i + cycle.t for i, c in enumerate(coeffs) if c)
    return Decomposition(T, cycle, tuple(coeffs), tuple(cycle.vertices[i] for i in idx))


@lru_cache(maxsize=8)
def _sums_by_subset(cycle: SymmetricCycle) -> dict[IntVector, list[int]]:
    """Map each achievable coordinate-wise sum to the vertex-subset bitmasks producing it."""
    verts = cycle.vertices
    n = len(verts)
    sums: list[IntVector] = [(0,) * cycle.t] * (1 << n)
    table: dict[IntVector, list[int]] = defaultdict(list)
    table[sums[0]].append(0)
    for m in range(1, 1 << n):
        low = m & -m
        v = verts[low.bit_length() - 1]
        s = tuple(p + x for p, x in zip(sums[m ^ low], v))
        sums[m] = s
        table[s].append(m)
    return dict(table)


def brute_force_decompose(
    tope: Sequence[int], cycle: SymmetricCycle, max_t: int = 8
) -> list[tuple[tuple[SignVector, ...], bool]]:
    """Every subset of the cycle's vertex set summing to the tope, each flagged
    for inclusion-minimality against the other hits.

    Exhausts all 2^(2t) subsets, so it refuses past the guard: this is a
    cross-checking oracle, not a production path.
    """
    T = tuple(tope)
    check_sign_vector(T, cycle.t)
    if cycle.t > max_t:
        raise ValueError(f"t={cycle.t} exceeds the oracle guard {max_t} (2^(2t) subsets)")
    masks = _sums_by_subset(cycle).get(T, [])
    results = []
    for m in masks:
        minimal = not any(o != m and o & m == o for o in masks)
        members = tuple(v for i, v in enumerate(cycle.vertices) if m >> i & 1)
        results.append((members, minimal))
    results.sort(key=lambda r: (len(r[0]), [sign_vector_str(v) for v in r[0]]))
    return results
