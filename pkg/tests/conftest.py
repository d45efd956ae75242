"""Shared strategies and brute-force oracles.

The oracles work on plain Python sets of integers and never touch the RREF
machinery they are used to check.
"""

from __future__ import annotations

import random
from itertools import product

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from framednets.codes import BinaryCode, BitWord, make_code

settings.register_profile(
    "default",
    max_examples=200,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


# -- oracles -----------------------------------------------------------------------


def span_set(generators: list[int]) -> set[int]:
    """Closure of the generators under XOR."""
    words = {0}
    for g in generators:
        words |= {w ^ g for w in words}
    return words


def dual_set(n: int, words: set[int]) -> set[int]:
    """All words of Z_2^n orthogonal to ``words`` (exhaustive over 2^n)."""
    return {v for v in range(1 << n) if all((v & w).bit_count() % 2 == 0 for w in words)}


def weight_enumerator_set(n: int, words: set[int]) -> list[int]:
    A = [0] * (n + 1)
    for w in words:
        A[w.bit_count()] += 1
    return A


def rank_by_elimination(n: int, generators: list[int]) -> int:
    """Gaussian elimination on 0/1 lists, column by column from the left."""
    rows = [[(g >> (n - 1 - j)) & 1 for j in range(n)] for g in generators]
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                rows[r] = [a ^ b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def rm_rows_by_formula(r: int, m: int) -> list[int]:
    """RM(r, m) generators from truth tables of monomials, built as strings."""
    from itertools import combinations

    rows = []
    points = list(product((0, 1), repeat=m))  # point j = binary expansion of j
    for deg in range(r + 1):
        for S in combinations(range(m), deg):
            # variable i is bit i of the point index (least significant first)
            s = "".join("1" if all(p[m - 1 - i] for i in S) else "0" for p in points)
            rows.append(int(s, 2))
    return rows


def lex_min_by_enumeration(words: set[int]) -> int:
    return min(words)


# -- strategies --------------------------------------------------------------------


@st.composite
def codes(draw, min_length: int = 1, max_length: int = 12, max_rank: int | None = None) -> BinaryCode:
    n = draw(st.integers(min_length, max_length))
    k = draw(st.integers(0, max_rank if max_rank is not None else n))
    gens = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=k, max_size=k))
    return make_code(n, [BitWord(n, g) for g in gens])


@st.composite
def even_codes_with_one(draw, min_length: int = 2, max_length: int = 12) -> BinaryCode:
    """Random even codes containing the all-one word (even length)."""
    n = 2 * draw(st.integers(max(1, min_length // 2), max_length // 2))
    k = draw(st.integers(0, n - 1))
    gens = []
    for _ in range(k):
        g = draw(st.integers(0, (1 << n) - 1))
        if g.bit_count() % 2:
            g ^= 1
        gens.append(BitWord(n, g))
    gens.append(BitWord.ones(n))
    return make_code(n, gens)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


def random_code(rng: random.Random, n: int, k: int) -> BinaryCode:
    return make_code(n, [BitWord(n, rng.getrandbits(n)) for _ in range(k)])


# -- acceptance summary -------------------------------------------------------------

ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
