"""Exact linear algebra over Z4.

Vectors are plain tuples of ints in ``{0, 1, 2, 3}``.  A :class:`Z4Code` keeps
its generator matrix in standard form

    ( I_k1  A     B  )
    ( 0     2I_k2 2C )

on permuted coordinates, together with the permutation that maps those
columns back to the caller's original column order.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

from z4lattice.errors import DomainError, ParseError

Z4Vector = tuple[int, ...]

_LEE = (0, 1, 2, 1)


def z4_vector(symbols: Iterable[int]) -> Z4Vector:
    """Validate and freeze a sequence of Z4 symbols."""
    vec = tuple(int(s) for s in symbols)
    if any(s < 0 or s > 3 for s in vec):
        raise DomainError(f"Z4 symbols must lie in {{0,1,2,3}}, got {vec}")
    return vec


def lee_weight(v: Sequence[int]) -> int:
    """Lee weight: symbols 1 and 3 weigh 1, symbol 2 weighs 2."""
    return sum(_LEE[s % 4] for s in v)


def lee_distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise DomainError("Lee distance needs vectors of equal length")
    return lee_weight([(a - b) % 4 for a, b in zip(u, v)])


def inner(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v)) % 4


@dataclass(frozen=True)
class Z4Code:
    """A Z4-linear code of type 4^k1 2^k2, stored in standard form.

    ``rows`` are the standard-form generators in permuted coordinates: column
    ``j`` of ``rows`` is column ``permutation[j]`` of the original code.
    """

    n: int
    k1: int
    k2: int
    rows: tuple[Z4Vector, ...]
    permutation: tuple[int, ...]
    _generator: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.rows) != self.k1 + self.k2:
            raise DomainError("row count must equal k1 + k2")
        if sorted(self.permutation) != list(range(self.n)):
            raise DomainError("permutation must be a permutation of range(n)")
        std = np.array(self.rows, dtype=np.int64).reshape(len(self.rows), self.n)
        gen = np.zeros_like(std)
        gen[:, list(self.permutation)] = std
        gen.setflags(write=False)
        object.__setattr__(self, "_generator", gen)

    @property
    def cardinality(self) -> int:
        return 4**self.k1 * 2**self.k2

    @property
    def type_string(self) -> str:
        return f"4^{self.k1} 2^{self.k2}"

    @property
    def generator(self) -> np.ndarray:
        """Generator matrix in the original column order (read-only array)."""
        return self._generator

    def generator_rows(self) -> list[Z4Vector]:
        return [tuple(int(x) for x in row) for row in self._generator]

    def blocks(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """The (A, B, C) blocks of the standard form."""
        std = np.array(self.rows, dtype=np.int64).reshape(self.k1 + self.k2, self.n)
        k1, k2 = self.k1, self.k2
        a = std[:k1, k1 : k1 + k2]
        b = std[:k1, k1 + k2 :]
        c = std[k1:, k1 + k2 :] // 2
        return a, b, c

    def contains(self, v: Sequence[int]) -> bool:
        """Membership test by reduction against the standard form."""
        if len(v) != self.n:
            return False
        x = [int(v[p]) % 4 for p in self.permutation]
        for i in range(self.k1):
            coef = x[i]
            if coef:
                x = [(xi - coef * gi) % 4 for xi, gi in zip(x, self.rows[i])]
        for i in range(self.k2):
            j = self.k1 + i
            if x[j] % 2:
                return False
            if x[j]:
                x = [(xi - gi) % 4 for xi, gi in zip(x, self.rows[j])]
        return not any(x)

    def to_text(self) -> str:
        lines = [f"Z4 {self.n} {self.k1} {self.k2}"]
        lines += [" ".join(str(int(s)) for s in row) for row in self._generator]
        return "\n".join(lines) + "\n"


def _pick_pivot(m: list[list[int]], rows: range, cols: Sequence[int], accept) -> tuple[int, int] | None:
    # leftmost column first, then topmost row
    for c in cols:
        for r in rows:
            if accept(m[r][c]):
                return r, c
    return None


def standard_form(rows: Sequence[Sequence[int]]) -> Z4Code:
    """Row-reduce generators over Z4 into standard form.

    Pivot ties are broken by leftmost column, then topmost row.  Column swaps
    are recorded in the returned permutation, so the code's codeword set (in
    original coordinates) is the Z4 span of ``rows``.
    """
    rows = list(rows)
    if not rows:
        raise DomainError("standard_form needs at least one row")
    n = len(rows[0])
    if n < 1:
        raise DomainError("rows must have length n >= 1")
    if any(len(r) != n for r in rows):
        raise DomainError("ragged generator rows")
    m = [[int(x) % 4 for x in r] for r in rows]
    perm = list(range(n))

    def swap_cols(a: int, b: int) -> None:
        if a == b:
            return
        for r in m:
            r[a], r[b] = r[b], r[a]
        perm[a], perm[b] = perm[b], perm[a]

    def eliminate(p: int, col: int, targets: Iterable[int], unit: bool) -> None:
        for r in targets:
            v = m[r][col]
            if r == p or v == 0:
                continue
            if unit:
                f = v
            elif v % 2 == 0:
                f = 1
            else:
                continue
            m[r] = [(x - f * y) % 4 for x, y in zip(m[r], m[p])]

    k1 = 0
    while True:
        # column order by current position; columns < k1 are pivots already
        found = _pick_pivot(m, range(k1, len(m)), range(k1, n), lambda v: v % 2 == 1)
        if found is None:
            break
        r, c = found
        m[k1], m[r] = m[r], m[k1]
        swap_cols(k1, c)
        if m[k1][k1] == 3:
            m[k1] = [(3 * x) % 4 for x in m[k1]]
        eliminate(k1, k1, range(len(m)), unit=True)
        k1 += 1

    k2 = 0
    while True:
        top = k1 + k2
        found = _pick_pivot(m, range(top, len(m)), range(top, n), lambda v: v == 2)
        if found is None:
            break
        r, c = found
        m[top], m[r] = m[r], m[top]
        swap_cols(top, c)
        # order-2 rows: clear the column in every other order-2 row
        eliminate(top, top, range(k1, len(m)), unit=False)
        # order-4 rows: keep their entries in this column binary
        for i in range(k1):
            if m[i][top] >= 2:
                m[i] = [(x - y) % 4 for x, y in zip(m[i], m[top])]
        k2 += 1

    std = tuple(tuple(r) for r in m[: k1 + k2])
    return Z4Code(n=n, k1=k1, k2=k2, rows=std, permutation=tuple(perm))


def zero_code(n: int) -> Z4Code:
    return standard_form([[0] * n])


def full_code(n: int) -> Z4Code:
    return standard_form(np.eye(n, dtype=int).tolist())


def message_count(code: Z4Code) -> int:
    return code.cardinality


def codeword_array(code: Z4Code, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Codewords with message indices in ``[start, stop)`` as a uint8 array.

    Message ``i`` is read as k1 quaternary digits followed by k2 binary digits,
    most significant first, so indices walk the message space
    lexicographically.
    """
    total = code.cardinality
    stop = total if stop is None else min(stop, total)
    start = max(0, start)
    if stop <= start:
        return np.zeros((0, code.n), dtype=np.uint8)
    idx = np.arange(start, stop, dtype=np.int64)
    gen = code.generator
    radices = [4] * code.k1 + [2] * code.k2
    words = np.zeros((len(idx), code.n), dtype=np.int64)
    rem = idx
    for pos in range(len(radices) - 1, -1, -1):
        digit = rem % radices[pos]
        rem = rem // radices[pos]
        words += digit[:, None] * gen[pos][None, :]
    return (words % 4).astype(np.uint8)


def enumerate_codewords(
    code: Z4Code, start: int = 0, stop: int | None = None, chunk: int = 1 << 16
) -> Iterator[Z4Vector]:
    """Yield every codeword exactly once, in lexicographic message order.

    ``start``/``stop`` select a slice of the message space, so disjoint ranges
    can be handed to separate workers.
    """
    total = code.cardinality if stop is None else min(stop, code.cardinality)
    for lo in range(start, total, chunk):
        block = codeword_array(code, lo, min(lo + chunk, total))
        for row in block:
            yield tuple(int(s) for s in row)


def dual(code: Z4Code) -> Z4Code:
    """Dual code, built algebraically from the standard form.

    With G = [[I, A, B], [0, 2I, 2C]] the dual is generated by
    [-(B^T + C^T A^T) | C^T | I] and [2A^T | 2I | 0].
    """
    n, k1, k2 = code.n, code.k1, code.k2
    a, b, c = code.blocks()
    r = n - k1 - k2
    top = np.concatenate(
        [-(b.T + c.T @ a.T), c.T, np.eye(r, dtype=np.int64)], axis=1
    ).reshape(r, n)
    bottom = np.concatenate(
        [2 * a.T, 2 * np.eye(k2, dtype=np.int64), np.zeros((k2, r), dtype=np.int64)], axis=1
    ).reshape(k2, n)
    std = np.concatenate([top, bottom], axis=0) % 4
    if std.shape[0] == 0:
        return zero_code(n)
    orig = np.zeros_like(std)
    orig[:, list(code.permutation)] = std
    return standard_form(orig.tolist())


def same_code(c1: Z4Code, c2: Z4Code) -> bool:
    """Codeword-set equality, decided by mutual generator containment."""
    if c1.n != c2.n or c1.cardinality != c2.cardinality:
        return False
    return all(c2.contains(g) for g in c1.generator_rows())


def min_lee_distance(code: Z4Code, budget: int | None = None, threads: int = 1) -> int:
    """Minimum Lee weight over nonzero codewords."""
    if code.cardinality < 2:
        raise DomainError("minimum Lee distance undefined for the zero code")
    from z4lattice.enumerators import swe_from_code

    swe = swe_from_code(code, budget=budget, threads=threads)
    return min(j + 2 * k for (i, j, k) in swe.terms if i != code.n)


def parse_z4_code(text: str) -> Z4Code:
    """Parse the ``Z4 <n> <k1> <k2>`` text format; rows need not be in standard form."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or lines[0][0] != "Z4" or len(lines[0]) != 4:
        raise ParseError("expected header 'Z4 <n> <k1> <k2>'")
    try:
        n, k1, k2 = (int(x) for x in lines[0][1:])
        rows = [[int(x) for x in ln] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"non-integer entry: {exc}") from None
    if len(rows) != k1 + k2:
        raise ParseError(f"header announces {k1 + k2} rows, found {len(rows)}")
    if any(len(r) != n for r in rows):
        raise ParseError(f"every row must have {n} symbols")
    if any(x < 0 or x > 3 for r in rows for x in r):
        raise ParseError("symbols must lie in {0,1,2,3}")
    if not rows:
        return zero_code(n)
    return standard_form(rows)
