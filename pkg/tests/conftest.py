import pytest

from saddles import new_game

# Golden 4x5 game: one weak saddle {r1,r2} x {c1,c2,c3}, value 4/3.
A1_ENTRIES = [
    [2, 1, 0, 1, 2],
    [0, 3, 4, 4, 1],
    [0, 2, 2, 1, 2],
    [2, 1, 0, 2, 1],
]

# Golden 3x3 game: pure saddle point (r1, c1), unique weak saddle {r1} x {c1}.
A2_ENTRIES = [
    [0, 0, 0],
    [0, 1, -1],
    [0, -1, 1],
]

# Golden 5x5 game: four weak saddles.
A3_ENTRIES = [
    [2, 2, 1, 3, 2],
    [2, 4, 0, 0, 2],
    [1, 3, 3, 4, 1],
    [2, 3, 1, 3, 2],
    [1, 0, 2, 2, 0],
]


def game_from(rows):
    flat = [v for row in rows for v in row]
    return new_game(len(rows), len(rows[0]), flat)


@pytest.fixture(scope="session")
def a1():
    return game_from(A1_ENTRIES)


@pytest.fixture(scope="session")
def a2():
    return game_from(A2_ENTRIES)


@pytest.fixture(scope="session")
def a3():
    return game_from(A3_ENTRIES)
