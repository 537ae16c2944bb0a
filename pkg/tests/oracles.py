"""Independent brute-force oracles.

These deliberately reimplement the definitions from scratch on plain
Fractions, without touching the package's dominance masks, enumeration
kernels, or simplex, so they can referee those paths.
"""

from fractions import Fraction
from itertools import combinations


def _nonempty_subsets(n):
    items = list(range(n))
    for k in range(1, n + 1):
        yield from combinations(items, k)


def _dominates_rows(entries, r1, r2, cols, mode):
    ge = all(entries[r1][c] >= entries[r2][c] for c in cols)
    gt_all = all(entries[r1][c] > entries[r2][c] for c in cols)
    gt_any = any(entries[r1][c] > entries[r2][c] for c in cols)
    if mode == "strict":
        return gt_all
    if mode == "weak-strict":
        return ge and gt_any
    return ge


def _dominates_cols(entries, c1, c2, rows, mode):
    ge = all(entries[r][c1] <= entries[r][c2] for r in rows)
    gt_all = all(entries[r][c1] < entries[r][c2] for r in rows)
    gt_any = any(entries[r][c1] < entries[r][c2] for r in rows)
    if mode == "strict":
        return gt_all
    if mode == "weak-strict":
        return ge and gt_any
    return ge


def brute_is_gsp(entries, row_set, col_set, mode="weak"):
    """Definition-level GSP test on a matrix given as nested Fractions/ints."""
    n, m = len(entries), len(entries[0])
    for r2 in range(n):
        if r2 in row_set:
            continue
        if not any(_dominates_rows(entries, r1, r2, col_set, mode) for r1 in row_set):
            return False
    for c2 in range(m):
        if c2 in col_set:
            continue
        if not any(_dominates_cols(entries, c1, c2, row_set, mode) for c1 in col_set):
            return False
    return True


def brute_saddles(entries, mode="weak"):
    """All inclusion-minimal GSPs by scanning every product, then filtering."""
    n, m = len(entries), len(entries[0])
    gsps = [
        (rows, cols)
        for rows in _nonempty_subsets(n)
        for cols in _nonempty_subsets(m)
        if brute_is_gsp(entries, rows, cols, mode)
    ]
    minimal = []
    for rows, cols in gsps:
        proper_sub = any(
            set(r2) <= set(rows) and set(c2) <= set(cols) and (r2, c2) != (rows, cols)
            for r2, c2 in gsps
        )
        if not proper_sub:
            minimal.append((rows, cols))
    return sorted(minimal)


def _solve_linear(matrix, rhs):
    """Exact Gaussian elimination; None when singular."""
    n = len(matrix)
    a = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col]
        a[col] = [v / inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [v - factor * p for v, p in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def support_enumeration_value(entries):
    """Exact minimax value by exhaustive square-support enumeration.

    For every equal-size support pair, solve the bordered linear systems that
    make the opponent indifferent across the support, and accept the first
    candidate with nonnegative weights and no improving pure deviation. Some
    square support always works, so this terminates with the value.
    """
    entries = [[Fraction(v) for v in row] for row in entries]
    n, m = len(entries), len(entries[0])
    for k in range(1, min(n, m) + 1):
        for rows in combinations(range(n), k):
            for cols in combinations(range(m), k):
                # Unknowns (y, v): opponent indifference across `rows`.
                y_system = [
                    [entries[r][c] for c in cols] + [Fraction(-1)] for r in rows
                ]
                y_system.append([Fraction(1)] * k + [Fraction(0)])
                y_sol = _solve_linear(y_system, [0] * k + [1])
                if y_sol is None:
                    continue
                x_system = [
                    [entries[r][c] for r in rows] + [Fraction(-1)] for c in cols
                ]
                x_system.append([Fraction(1)] * k + [Fraction(0)])
                x_sol = _solve_linear(x_system, [0] * k + [1])
                if x_sol is None:
                    continue
                y, v = y_sol[:k], y_sol[k]
                x, v2 = x_sol[:k], x_sol[k]
                if v != v2:
                    continue
                if any(p < 0 for p in x) or any(p < 0 for p in y):
                    continue
                full_y = [Fraction(0)] * m
                for weight, c in zip(y, cols):
                    full_y[c] = weight
                full_x = [Fraction(0)] * n
                for weight, r in zip(x, rows):
                    full_x[r] = weight
                row_payoffs = [
                    sum(entries[r][c] * full_y[c] for c in range(m)) for r in range(n)
                ]
                col_payoffs = [
                    sum(full_x[r] * entries[r][c] for r in range(n)) for c in range(m)
                ]
                if max(row_payoffs) <= v and min(col_payoffs) >= v:
                    return v
    raise AssertionError("no square support admitted an equilibrium")
