"""Symmetric cycles in tope graphs: validation, canonical construction,
depth-first search, and maximal-positive-part vertices."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    DimensionError,
    SignVector,
    Violation,
    all_plus,
    flip,
    is_adjacent,
    negate,
    positive_part,
    separation_set,
    sign_vector_str,
)


class CycleError(ValueError):
    """A vertex sequence violates the symmetric-cycle invariants."""

    def __init__(self, violations: Sequence[Violation]):
        super().__init__("; ".join(v.detail for v in violations) or "invalid cycle")
        self.violations = list(violations)


@dataclass(frozen=True)
class SymmetricCycle:
    """2t topes R^0..R^(2t-1): consecutive steps flip one element and R^(k+t) = -R^k."""

    t: int
    vertices: tuple[SignVector, ...]

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


def validate_cycle(vertices: Iterable[Sequence[int]], tope_set: Iterable[Sequence[int]] | None = None) -> list[Violation]:
    """Check every symmetric-cycle invariant; an empty list means valid.

    Checks run in a fixed order (shape, distinctness, adjacency, antipodal
    symmetry, flip permutation, optional membership), so the first entry of
    the report names the first violated invariant and its index.
    """
    verts = [tuple(v) for v in vertices]
    n = len(verts)
    if n < 4 or n % 2:
        return [Violation("shape", (), f"vertex count {n} is not an even number >= 4")]
    t = n // 2
    for k, v in enumerate(verts):
        if len(v) != t or any(x not in (1, -1) for x in v):
            return [Violation("shape", (k,), f"vertex {k} is not a +/-1 vector of length t={t}")]
    out: list[Violation] = []
    seen: dict[SignVector, int] = {}
    for k, v in enumerate(verts):
        if v in seen:
            out.append(Violation("distinct", (seen[v], k), f"vertices {seen[v]} and {k} coincide"))
        else:
            seen[v] = k
    adjacency_ok = True
    for k in range(n):
        if not is_adjacent(verts[k], verts[(k + 1) % n]):
            adjacency_ok = False
            out.append(Violation("adjacency", (k,), f"step {k} -> {(k + 1) % n} does not flip exactly one element"))
    for k in range(t):
        if verts[k + t] != negate(verts[k]):
            out.append(Violation("antipodal", (k,), f"antipodal symmetry fails at k={k}"))
    if adjacency_ok:
        flips = sorted(e for k in range(t) for e in separation_set(verts[k], verts[k + 1]))
        if flips != list(range(1, t + 1)):
            out.append(Violation("flip_permutation", (), "first-half flips are not a permutation of the ground set"))
    if tope_set is not None:
        members = {tuple(v) for v in tope_set}
        for k, v in enumerate(verts):
            if v not in members:
                out.append(Violation("membership", (k,), f"vertex {k} ({sign_vector_str(v)}) is not in the tope set"))
    return out


def symmetric_cycle(vertices: Iterable[Sequence[int]], tope_set: Iterable[Sequence[int]] | None = None) -> SymmetricCycle:
    """Validate and wrap a vertex sequence; raises CycleError on any violation."""
    verts = tuple(tuple(v) for v in vertices)
    violations = validate_cycle(verts, tope_set)
    if violations:
        raise CycleError(violations)
    return SymmetricCycle(len(verts) // 2, verts)


def canonical_hypercube_cycle(t: int) -> SymmetricCycle:
    """All-plus start; step k flips element k; the second half is the antipodal image."""
    if t < 2:
        raise ValueError("t must be >= 2")
    half = [all_plus(t)]
    for e in range(1, t):
        half.append(flip(half[-1], e))
    return SymmetricCycle(t, tuple(half + [negate(v) for v in half]))


def find_symmetric_cycle(
    topes: Iterable[Sequence[int]],
    start: Sequence[int] | None = None,
    seed: int = 0,
) -> SymmetricCycle | None:
    """Depth-first search for a symmetric cycle inside a negation-closed tope set.

    Walks half a cycle: t steps, each flipping a previously untouched element
    and staying inside the tope set; the antipodal half then closes the cycle
    automatically.  The seed only shuffles the element order tried at each
    step, so equal seeds give equal cycles.  Returns None when the search is
    exhausted -- a result, not an error.
    """
    pool = sorted({tuple(v) for v in topes}, key=sign_vector_str)
    if not pool:
        return None
    t = len(pool[0])
    if any(len(v) != t for v in pool):
        raise DimensionError("tope set has vectors of mixed length")
    if t < 2:
        raise ValueError("ground set must have t >= 2")
    members = frozenset(pool)
    for v in pool:
        if negate(v) not in members:
            raise ValueError(f"tope set is not closed under negation: missing -{sign_vector_str(v)}")
    order = list(range(1, t + 1))
    random.Random(seed).shuffle(order)
    if start is not None:
        w0 = tuple(start)
        if w0 not in members:
            raise ValueError(f"start tope {sign_vector_str(w0)} is not in the tope set")
        starts = [w0]
    else:
        starts = pool
    for w0 in starts:
        path = [w0]
        if _extend_path(path, set(), order, members, t):
            half = path[:t]
            return SymmetricCycle(t, tuple(half + [negate(v) for v in half]))
    return None


def _extend_path(path: list[SignVector], used: set[int], order: list[int], members: frozenset, t: int) -> bool:
    if len(used) == t:
        return True
    cur = path[-1]
    for e in order:
        if e in used:
            continue
        nxt = flip(cur, e)
        if nxt in members:
            path.append(nxt)
            used.add(e)
            if _extend_path(path, used, order, members, t):
                return True
            path.pop()
            used.remove(e)
    return False


def maxpos_vertices(cycle: SymmetricCycle) -> list[SignVector]:
    """Vertices whose positive parts are inclusion-maximal among the cycle's vertices, in cycle order."""
    parts = [positive_part(v) for v in cycle.vertices]
    return [cycle.vertices[i] for i, p in enumerate(parts) if not any(p < q for q in parts)]


def normalize_cycle(cycle: SymmetricCycle) -> SymmetricCycle:
    """Rotate/reflect so the lexicographically smallest vertex comes first,
    followed by the smaller of its two neighbors."""
    verts = cycle.vertices
    n = len(verts)
    keys = [sign_vector_str(v) for v in verts]
    i = min(range(n), key=keys.__getitem__)
    if keys[(i + 1) % n] <= keys[(i - 1) % n]:
        rotated = [verts[(i + k) % n] for k in range(n)]
    else:
        rotated = [verts[(i - k) % n] for k in range(n)]
    return SymmetricCycle(cycle.t, tuple(rotated))
