"""Dominance relations between actions and between sets of actions.

An action dominates another *relative to a restriction set* of the opponent's
actions. Three flavours are supported:

* ``WEAK``: every comparison at least as good (this is sometimes called
  "very weak" dominance elsewhere; here it is the default notion).
* ``STRICT``: every comparison strictly better.
* ``WEAK_REQUIRE_STRICT``: at least as good everywhere and strictly better
  somewhere. Exposed for completeness; the interchangeability/equivalence
  guarantees checked by the verify harness do not extend to it.

The column player maximizes the negated matrix, so column dominance flips
every inequality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import GameInputError
from .game import ZeroSumGame


class DominanceMode(enum.Enum):
    WEAK = "weak"
    STRICT = "strict"
    WEAK_REQUIRE_STRICT = "weak-strict"

    @property
    def code(self) -> int:
        """Stable integer tag used by the enumeration kernels."""
        return _MODE_CODES[self]

    @classmethod
    def from_token(cls, token: str) -> "DominanceMode":
        try:
            return cls(token)
        except ValueError:
            raise GameInputError(
                f"unknown dominance mode {token!r}; expected one of "
                f"{[m.value for m in cls]}"
            ) from None


_MODE_CODES = {
    DominanceMode.WEAK: 0,
    DominanceMode.STRICT: 1,
    DominanceMode.WEAK_REQUIRE_STRICT: 2,
}


@dataclass(frozen=True)
class DominanceWitness:
    """For each dominated action index, one action index that dominates it."""

    mapping: Mapping[int, int]

    def __len__(self) -> int:
        return len(self.mapping)


def _index_set(indices: Iterable[int], limit: int, axis: str) -> tuple[int, ...]:
    out = tuple(sorted(set(int(i) for i in indices)))
    if out and (out[0] < 0 or out[-1] >= limit):
        raise GameInputError(f"{axis} index out of range: {out}")
    return out


def _compare(a, b, mode: DominanceMode, seen_strict: bool) -> tuple[bool, bool]:
    # Returns (still dominating, strict inequality seen so far).
    if mode is DominanceMode.STRICT:
        return a > b, True
    return a >= b, seen_strict or a > b


def row_dominates(
    game: ZeroSumGame, r1: int, r2: int, col_set: Iterable[int], mode: DominanceMode
) -> bool:
    """Does row `r1` dominate row `r2` with respect to `col_set`?"""
    cols = _index_set(col_set, game.cols, "column")
    if not cols:
        raise GameInputError("dominance needs a nonempty restriction set")
    _index_set((r1, r2), game.rows, "row")
    strict = False
    for c in cols:
        ok, strict = _compare(game.entry(r1, c), game.entry(r2, c), mode, strict)
        if not ok:
            return False
    if mode is DominanceMode.WEAK_REQUIRE_STRICT:
        return strict
    return True


def col_dominates(
    game: ZeroSumGame, c1: int, c2: int, row_set: Iterable[int], mode: DominanceMode
) -> bool:
    """Does column `c1` dominate column `c2` with respect to `row_set`?

    The column player prefers small matrix entries, so `c1` dominates when
    its entries are <= (resp. <) those of `c2` on the restriction rows.
    """
    rows = _index_set(row_set, game.rows, "row")
    if not rows:
        raise GameInputError("dominance needs a nonempty restriction set")
    _index_set((c1, c2), game.cols, "column")
    strict = False
    for r in rows:
        ok, strict = _compare(game.entry(r, c2), game.entry(r, c1), mode, strict)
        if not ok:
            return False
    if mode is DominanceMode.WEAK_REQUIRE_STRICT:
        return strict
    return True


def set_dominates_rows(
    game: ZeroSumGame,
    dominating: Iterable[int],
    dominated: Iterable[int],
    col_set: Iterable[int],
    mode: DominanceMode,
) -> DominanceWitness | None:
    """Witness mapping each dominated row to a dominating row, if one exists.

    The empty dominated set is vacuously dominated (empty witness). Ties are
    broken toward the lowest-index dominating action, so witnesses are
    reproducible.
    """
    doms = _index_set(dominating, game.rows, "row")
    targets = _index_set(dominated, game.rows, "row")
    mapping: dict[int, int] = {}
    for r2 in targets:
        for r1 in doms:
            if row_dominates(game, r1, r2, col_set, mode):
                mapping[r2] = r1
                break
        else:
            return None
    return DominanceWitness(mapping)


def set_dominates_cols(
    game: ZeroSumGame,
    dominating: Iterable[int],
    dominated: Iterable[int],
    row_set: Iterable[int],
    mode: DominanceMode,
) -> DominanceWitness | None:
    """Column-player mirror of `set_dominates_rows`."""
    doms = _index_set(dominating, game.cols, "column")
    targets = _index_set(dominated, game.cols, "column")
    mapping: dict[int, int] = {}
    for c2 in targets:
        for c1 in doms:
            if col_dominates(game, c1, c2, row_set, mode):
                mapping[c2] = c1
                break
        else:
            return None
    return DominanceWitness(mapping)


def _rows_identical(game: ZeroSumGame, r1: int, r2: int, cols: tuple[int, ...]) -> bool:
    return all(game.entry(r1, c) == game.entry(r2, c) for c in cols)


def _cols_identical(game: ZeroSumGame, c1: int, c2: int, rows: tuple[int, ...]) -> bool:
    return all(game.entry(r, c1) == game.entry(r, c2) for r in rows)


def undominated_rows(game: ZeroSumGame, mode: DominanceMode) -> tuple[int, ...]:
    """Rows not dominated by any non-identical row w.r.t. all columns.

    The non-identical rule only matters under WEAK (identical rows dominate
    each other weakly but should all survive elimination); it is vacuous for
    the other modes.
    """
    cols = tuple(range(game.cols))
    out = []
    for r2 in range(game.rows):
        dominated = any(
            r1 != r2
            and not _rows_identical(game, r1, r2, cols)
            and row_dominates(game, r1, r2, cols, mode)
            for r1 in range(game.rows)
        )
        if not dominated:
            out.append(r2)
    return tuple(out)


def undominated_cols(game: ZeroSumGame, mode: DominanceMode) -> tuple[int, ...]:
    """Column mirror of `undominated_rows`."""
    rows = tuple(range(game.rows))
    out = []
    for c2 in range(game.cols):
        dominated = any(
            c1 != c2
            and not _cols_identical(game, c1, c2, rows)
            and col_dominates(game, c1, c2, rows, mode)
            for c1 in range(game.cols)
        )
        if not dominated:
            out.append(c2)
    return tuple(out)
