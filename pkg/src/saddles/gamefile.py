"""Plain-text game files.

Format: a header line with two positive integers (rows, cols), then
rows*cols whitespace-separated payoff tokens in row-major order. Tokens are
integers, exact decimals, or "p/q" rationals with positive q. Lines whose
first non-blank character is '#' are comments. Parse errors carry 1-based
line and column positions.
"""

from __future__ import annotations

from .errors import GameInputError
from .game import ZeroSumGame, new_game, parse_rational


class GameParseError(GameInputError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("#"):
            continue
        col = 0
        for chunk in line.split():
            col = line.index(chunk, col)
            yield chunk, lineno, col + 1
            col += len(chunk)


def parse_game(text: str) -> ZeroSumGame:
    stream = list(_tokens(text))
    if len(stream) < 2:
        raise GameParseError("missing header (rows and cols)", 1, 1)

    header = []
    for token, line, column in stream[:2]:
        try:
            value = int(token)
        except ValueError:
            raise GameParseError(
                f"header must be two integers, got {token!r}", line, column
            ) from None
        if value < 1:
            raise GameParseError("rows and cols must be positive", line, column)
        header.append(value)
    rows, cols = header

    body = stream[2:]
    expected = rows * cols
    if len(body) < expected:
        line, column = (body[-1][1], body[-1][2]) if body else (stream[1][1], stream[1][2])
        raise GameParseError(
            f"expected {expected} payoff entries, found {len(body)}", line, column
        )
    if len(body) > expected:
        _, line, column = body[expected]
        raise GameParseError(
            f"expected {expected} payoff entries, found {len(body)}", line, column
        )

    entries = []
    for token, line, column in body:
        try:
            entries.append(parse_rational(token))
        except GameInputError as exc:
            raise GameParseError(str(exc), line, column) from None
    return new_game(rows, cols, entries)


def format_game(game: ZeroSumGame) -> str:
    """Canonical text form; `parse_game` reproduces the game entry-exactly."""
    return game.to_text()
