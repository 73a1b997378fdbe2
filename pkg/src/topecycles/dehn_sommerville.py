"""Exact verification of the Dehn-Sommerville type identities satisfied by
long f-vectors: boundary rows, a palindromic polynomial identity checked at
the coefficient level, a row recurrence, an alternating sum, and closed-form
spot checks for t in {5, 6, 7}."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence


@dataclass(frozen=True)
class SpecialCaseNote:
    label: str
    holds: bool


@dataclass(frozen=True)
class DSReport:
    t: int
    boundary_ok: bool
    polynomial_residual: tuple[int, ...]
    recurrence_ok: dict[int, bool]
    alternating_sum: int
    special_case_notes: tuple[SpecialCaseNote, ...]

    @property
    def passes(self) -> bool:
        return (
            self.boundary_ok
            and not any(self.polynomial_residual)
            and all(self.recurrence_ok.values())
            and self.alternating_sum == 0
        )


def _t_of(f: Sequence[int]) -> int:
    if len(f) < 2:
        raise ValueError("an f-vector needs at least entries f_0, f_1")
    return len(f) - 1


def ds_polynomial_sides(f: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Degree-ascending coefficients of both sides of the polynomial identity

        sum_{j=3..t} (C(t,j) - f_j) (x-1)^(t-j)
            ==  - sum_{j=3..t} (-1)^j (C(t,j) - f_j) x^(t-j).

    Both sides have degree at most t-3, hence t-2 coefficients.
    """
    t = _t_of(f)
    width = max(t - 2, 0)
    lhs = [0] * width
    rhs = [0] * width
    for j in range(3, t + 1):
        d = comb(t, j) - f[j]
        n = t - j
        for i in range(n + 1):
            lhs[i] += d * comb(n, i) * (-1) ** (n - i)
        rhs[n] -= d * (-1) ** j
    return tuple(lhs), tuple(rhs)


def check_ds(f: Sequence[int]) -> DSReport:
    """Full report on one long f-vector: boundary rows f_j = C(t,j) for j <= 2
    and f_{t-1} = f_t = 0, the coefficient-level polynomial residual, the row
    recurrence, the alternating sum, and any special-case notes."""
    t = _t_of(f)
    boundary = all(f[j] == comb(t, j) for j in range(min(2, t) + 1))
    boundary = boundary and f[t] == 0 and f[t - 1] == 0
    lhs, rhs = ds_polynomial_sides(f)
    return DSReport(
        t=t,
        boundary_ok=boundary,
        polynomial_residual=tuple(a - b for a, b in zip(lhs, rhs)),
        recurrence_ok=check_recurrence(f),
        alternating_sum=check_alternating_sum(f),
        special_case_notes=tuple(special_cases(f)),
    )


def check_recurrence(f: Sequence[int]) -> dict[int, bool]:
    """Row recurrence for each 3 <= j <= t-2:

        C(t,j) - f_j  ==  - sum_{i=3..j} (-1)^i C(t-i, j-i) (C(t,i) - f_i).

    Empty (vacuously true) when t < 5.
    """
    t = _t_of(f)
    out: dict[int, bool] = {}
    for j in range(3, t - 1):
        lhs = comb(t, j) - f[j]
        rhs = -sum((-1) ** i * comb(t - i, j - i) * (comb(t, i) - f[i]) for i in range(3, j + 1))
        out[j] = lhs == rhs
    return out


def check_alternating_sum(f: Sequence[int]) -> int:
    """The signed sum over 1 <= j <= t-2; the identity holds iff it is zero."""
    t = _t_of(f)
    return sum((-1) ** j * f[j] for j in range(1, max(t - 1, 1)))


def special_cases(f: Sequence[int]) -> list[SpecialCaseNote]:
    """Closed-form spot checks, available only for t in {5, 6, 7}."""
    t = _t_of(f)
    notes = []
    if t == 5:
        notes.append(SpecialCaseNote("f3 == C(5,2) - 5 == 5", f[3] == comb(5, 2) - 5))
    elif t == 6:
        notes.append(SpecialCaseNote("f3 == C(6,3) - 2*6 + 4 == 12", f[3] == comb(6, 3) - 2 * 6 + 4))
        notes.append(SpecialCaseNote("f4 == C(6,2) - 3*6 + 6 == 3", f[4] == comb(6, 2) - 3 * 6 + 6))
    elif t == 7:
        notes.append(SpecialCaseNote("f4 == 2*f3 - 35", f[4] == 2 * f[3] - 35))
        notes.append(SpecialCaseNote("f5 == f3 - 21", f[5] == f[3] - 21))
        notes.append(SpecialCaseNote("f4 == 2*f5 + 7", f[4] == 2 * f[5] + 7))
        notes.append(SpecialCaseNote("f4 is odd", f[4] % 2 == 1))
    return notes
