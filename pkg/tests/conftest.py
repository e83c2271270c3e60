import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from z4lattice import catalog
from z4lattice.f2core import F2Code
from z4lattice.z4core import standard_form


def span_z4(rows, n):
    """Additive closure of the rows inside Z4^n (brute force)."""
    words = {tuple([0] * n)}
    frontier = list(words)
    gens = [tuple(int(x) % 4 for x in r) for r in rows]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                s = tuple((a + b) % 4 for a, b in zip(w, g))
                if s not in words:
                    words.add(s)
                    nxt.append(s)
        frontier = nxt
    return words


def brute_dual_z4(words, n):
    return {
        x
        for x in itertools.product(range(4), repeat=n)
        if all(sum(a * b for a, b in zip(x, w)) % 4 == 0 for w in words)
    }


def span_f2(rows, n):
    words = {tuple([0] * n)}
    for r in rows:
        words |= {tuple((a + b) % 2 for a, b in zip(w, r)) for w in words}
    return words


@st.composite
def z4_matrices(draw, max_n=6, max_rows=4):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_rows))
    rows = draw(st.lists(st.lists(st.integers(0, 3), min_size=n, max_size=n), min_size=k, max_size=k))
    return rows


@st.composite
def f2_matrices(draw, min_n=1, max_n=8, max_rows=4):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(0, max_rows))
    rows = draw(st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=k, max_size=k))
    return n, rows


def random_z4_code(rng: np.random.Generator, n: int, rows: int):
    return standard_form(rng.integers(0, 4, size=(rows, n)).tolist())


def random_f2_code(rng: np.random.Generator, n: int, rows: int) -> F2Code:
    return F2Code.from_rows(rng.integers(0, 2, size=(rows, n)).tolist(), n=n)


@pytest.fixture(scope="session")
def o8():
    return catalog.octacode()


@pytest.fixture(scope="session")
def c12_pair():
    return catalog.c12_pair()


@pytest.fixture(scope="session")
def c12(c12_pair):
    return catalog.get("C12").code()


@pytest.fixture(scope="session")
def rm16():
    return catalog.get("RM16").code()
