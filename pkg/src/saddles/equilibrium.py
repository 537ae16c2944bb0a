"""Exact game values, Nash equilibria, and pure saddle points.

Everything is computed over rationals; `game_value` and `nash_equilibrium`
share one exact LP solve, so the returned value and strategies are
consistent by construction and verifiable with `is_nash`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GameInputError
from .game import ActionProduct, ZeroSumGame
from .simplex import solve_standard_max


@dataclass(frozen=True)
class PureSaddlePoint:
    """A cell that is simultaneously a column maximum and a row minimum."""

    row: int
    col: int


def _exact(value) -> Fraction:
    if isinstance(value, float):
        raise GameInputError("probabilities and values must be exact, not floats")
    return Fraction(value)


def _exact_vector(vec) -> tuple[Fraction, ...]:
    return tuple(_exact(p) for p in vec)


@dataclass(frozen=True)
class MixedStrategyPair:
    """Mixed strategies for both players plus the row player's expected payoff."""

    row_strategy: tuple[Fraction, ...]
    col_strategy: tuple[Fraction, ...]
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "row_strategy", _exact_vector(self.row_strategy))
        object.__setattr__(self, "col_strategy", _exact_vector(self.col_strategy))
        object.__setattr__(self, "value", _exact(self.value))
        for vec in (self.row_strategy, self.col_strategy):
            if any(p < 0 for p in vec):
                raise GameInputError("strategy probabilities must be nonnegative")
            if sum(vec) != 1:
                raise GameInputError("strategy probabilities must sum to exactly 1")

    def support(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (
            tuple(i for i, p in enumerate(self.row_strategy) if p > 0),
            tuple(j for j, p in enumerate(self.col_strategy) if p > 0),
        )


def pure_saddle_points(game: ZeroSumGame) -> tuple[PureSaddlePoint, ...]:
    """All cells maximal in their column and minimal in their row, row-major."""
    out = []
    for r in range(game.rows):
        for c in range(game.cols):
            v = game.entry(r, c)
            if all(v >= game.entry(r2, c) for r2 in range(game.rows)) and all(
                v <= game.entry(r, c2) for c2 in range(game.cols)
            ):
                out.append(PureSaddlePoint(r, c))
    return tuple(out)


def _solve_lp(game: ZeroSumGame):
    # Shift entries positive so the normalized formulation applies, then
    # maximize sum(u) s.t. (A + k) u <= 1, u >= 0; u rescales to the column
    # strategy and the row constraints' duals to the row strategy.
    shift = 1 - min(v for row in game.entries for v in row)
    shifted = [[v + shift for v in row] for row in game.entries]
    ones = [Fraction(1)] * game.cols
    rhs = [Fraction(1)] * game.rows
    total, u, duals = solve_standard_max(ones, shifted, rhs)
    value = 1 / total - shift
    col_strategy = tuple(ui / total for ui in u)
    row_strategy = tuple(di / total for di in duals)
    return value, row_strategy, col_strategy


def game_value(game: ZeroSumGame) -> Fraction:
    """The exact minimax value."""
    value, _, _ = _solve_lp(game)
    return value


def nash_equilibrium(game: ZeroSumGame) -> MixedStrategyPair:
    """One exact equilibrium; deterministic given the fixed pivot rule."""
    value, row_strategy, col_strategy = _solve_lp(game)
    return MixedStrategyPair(row_strategy, col_strategy, value)


def expected_value(game: ZeroSumGame, pair: MixedStrategyPair) -> Fraction:
    """x^T A y, exactly."""
    return sum(
        pair.row_strategy[r] * game.entry(r, c) * pair.col_strategy[c]
        for r in range(game.rows)
        for c in range(game.cols)
        if pair.row_strategy[r] != 0 and pair.col_strategy[c] != 0
    )


def is_nash(game: ZeroSumGame, pair: MixedStrategyPair) -> bool:
    """No pure deviation helps either player, and the declared value matches.

    True iff max_r (A y)_r == x^T A y == min_c (x^T A)_c == pair.value.
    """
    if len(pair.row_strategy) != game.rows or len(pair.col_strategy) != game.cols:
        raise GameInputError("strategy lengths do not match the game")
    payoff = expected_value(game, pair)
    if payoff != pair.value:
        return False
    row_best = max(
        sum(game.entry(r, c) * pair.col_strategy[c] for c in range(game.cols))
        for r in range(game.rows)
    )
    col_best = min(
        sum(pair.row_strategy[r] * game.entry(r, c) for r in range(game.rows))
        for c in range(game.cols)
    )
    return row_best == payoff == col_best


def embed_strategy(
    pair: MixedStrategyPair, product: ActionProduct, full_rows: int, full_cols: int
) -> MixedStrategyPair:
    """Lift a subgame strategy pair to the full game (zeros off the product)."""
    if len(pair.row_strategy) != len(product.row_set) or len(
        pair.col_strategy
    ) != len(product.col_set):
        raise GameInputError("strategy lengths do not match the product")
    if product.row_set[-1] >= full_rows or product.col_set[-1] >= full_cols:
        raise GameInputError("product does not fit the requested dimensions")
    rows = [Fraction(0)] * full_rows
    cols = [Fraction(0)] * full_cols
    for p, r in zip(pair.row_strategy, product.row_set):
        rows[r] = p
    for p, c in zip(pair.col_strategy, product.col_set):
        cols[c] = p
    return MixedStrategyPair(tuple(rows), tuple(cols), pair.value)
