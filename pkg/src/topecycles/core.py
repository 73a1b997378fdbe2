"""Sign-vector arithmetic over the ground set {1, ..., t}."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

SignVector = tuple[int, ...]
IntVector = tuple[int, ...]

_SIGN_OF = {"+": 1, "-": -1}


class DimensionError(ValueError):
    """Operands live on ground sets of different sizes."""


@dataclass(frozen=True)
class Violation:
    """A failed structural check: what broke, and where."""

    kind: str
    where: tuple[int, ...]
    detail: str


def parse_sign_vector(text: str) -> SignVector:
    """Parse a '+'/'-' string; character k is the sign of element k+1."""
    if not text:
        raise ValueError("empty sign vector")
    try:
        return tuple(_SIGN_OF[ch] for ch in text)
    except KeyError as exc:
        raise ValueError(f"invalid sign character {exc.args[0]!r} in {text!r}") from None


def sign_vector_str(v: Sequence[int]) -> str:
    return "".join("+" if x > 0 else "-" for x in v)


def check_sign_vector(v: Sequence[int], t: int | None = None) -> None:
    if any(x not in (1, -1) for x in v):
        raise ValueError(f"not a sign vector: {tuple(v)!r}")
    if t is not None and len(v) != t:
        raise DimensionError(f"sign vector has length {len(v)}, expected {t}")


def all_plus(t: int) -> SignVector:
    if t < 1:
        raise ValueError("t must be positive")
    return (1,) * t


def negate(v: Sequence[int]) -> SignVector:
    return tuple(-x for x in v)


def flip(v: Sequence[int], e: int) -> SignVector:
    """Negate element e (1-based), keeping all others."""
    if not 1 <= e <= len(v):
        raise ValueError(f"element {e} outside 1..{len(v)}")
    return tuple(-x if i == e - 1 else x for i, x in enumerate(v))


def positive_part(v: Sequence[int]) -> frozenset[int]:
    """Elements where the vector is +1."""
    return frozenset(e for e, x in enumerate(v, start=1) if x > 0)


def negative_part(v: Sequence[int]) -> frozenset[int]:
    """Elements where the vector is -1."""
    return frozenset(e for e, x in enumerate(v, start=1) if x < 0)


def separation_set(a: Sequence[int], b: Sequence[int]) -> frozenset[int]:
    """Elements on which two topes disagree."""
    _same_length(a, b)
    return frozenset(e for e, (x, y) in enumerate(zip(a, b), start=1) if x != y)


def sum_topes(vectors: Iterable[Sequence[int]]) -> IntVector:
    """Coordinate-wise integer sum of a non-empty collection of sign vectors."""
    it = iter(vectors)
    try:
        total = list(next(it))
    except StopIteration:
        raise ValueError("sum_topes needs a non-empty collection") from None
    for v in it:
        if len(v) != len(total):
            raise DimensionError(f"length mismatch: {len(v)} vs {len(total)}")
        for i, x in enumerate(v):
            total[i] += x
    return tuple(total)


def as_tope(v: Sequence[int]) -> SignVector | None:
    """The vector itself if every entry is +1 or -1, else None (not a tope)."""
    if all(x == 1 or x == -1 for x in v):
        return tuple(v)
    return None


def is_adjacent(a: Sequence[int], b: Sequence[int]) -> bool:
    """Tope-graph edge test: the topes differ on exactly one element."""
    _same_length(a, b)
    return sum(1 for x, y in zip(a, b) if x != y) == 1


def _same_length(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")
