"""Satisfiability of XOR-linear systems over GF(2).

Rows are bitmask integers, so elimination works on machine words regardless of
variable count.  Everything is deterministic: pivots are chosen in ascending
variable order and free variables default to 0.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class XorSystem:
    """n variables; each row is (sorted index tuple, parity) meaning sum of vars = parity mod 2."""

    n: int
    rows: tuple[tuple[tuple[int, ...], int], ...]

    @staticmethod
    def build(n: int, rows: list[tuple[list[int], int]]) -> "XorSystem":
        packed = []
        for idx, parity in rows:
            if any(not 0 <= i < n for i in idx):
                raise ValueError(f"variable index out of range in row {idx}")
            packed.append((tuple(sorted(idx)), parity & 1))
        return XorSystem(n, tuple(packed))


@dataclass(frozen=True)
class Sat:
    assignment: tuple[int, ...]
    free_vars: tuple[int, ...]


@dataclass(frozen=True)
class Unsat:
    certificate: tuple[int, ...]
    """Original row indices whose GF(2) sum is the contradiction 0 = 1."""


SolveResult = Sat | Unsat


def _masks(sys: XorSystem) -> list[tuple[int, int, int]]:
    # (coefficient mask, parity, history mask over original row indices)
    out = []
    for r, (idx, parity) in enumerate(sys.rows):
        mask = 0
        for i in idx:
            mask ^= 1 << i  # repeated indices cancel over GF(2)
        out.append((mask, parity, 1 << r))
    return out


def solve(sys: XorSystem) -> SolveResult:
    """Gauss-Jordan elimination; returns one satisfying assignment or an unsat certificate."""
    rows = _masks(sys)
    pivot_rows: list[tuple[int, int, int, int]] = []  # (pivot col, mask, parity, history)
    for mask, parity, hist in rows:
        for col, pmask, pparity, phist in pivot_rows:
            if mask >> col & 1:
                mask ^= pmask
                parity ^= pparity
                hist ^= phist
        if mask == 0:
            if parity == 1:
                cert = tuple(i for i in range(len(sys.rows)) if hist >> i & 1)
                return Unsat(cert)
            continue
        col = (mask & -mask).bit_length() - 1  # lowest set bit: ascending pivot order
        # Reduce earlier pivot rows so the matrix stays in reduced form.
        for j, (c, m, p, h) in enumerate(pivot_rows):
            if m >> col & 1:
                pivot_rows[j] = (c, m ^ mask, p ^ parity, h ^ hist)
        pivot_rows.append((col, mask, parity, hist))
        pivot_rows.sort()
    pivots = {col for col, _, _, _ in pivot_rows}
    bits = 0
    for col, mask, parity, _ in pivot_rows:
        # Row is col + free variables only; free variables are 0, so value = parity.
        if parity:
            bits |= 1 << col
    assignment = tuple(bits >> i & 1 for i in range(sys.n))
    for idx, parity in sys.rows:
        if sum(assignment[i] for i in idx) & 1 != parity:
            raise AssertionError("internal error: assignment does not satisfy a row")
    free = tuple(i for i in range(sys.n) if i not in pivots)
    return Sat(assignment, free)


def rank(sys: XorSystem) -> int:
    """GF(2) rank of the coefficient matrix; n - rank is the solution space dimension."""
    basis: dict[int, int] = {}  # pivot bit index -> reduced mask
    for mask, _, _ in _masks(sys):
        while mask:
            piv = (mask & -mask).bit_length() - 1
            if piv not in basis:
                basis[piv] = mask
                break
            mask ^= basis[piv]
    return len(basis)
