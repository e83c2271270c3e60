"""Binary linear codes: enumerators, duals, Reed-Muller codes, Schur closure."""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from math import comb

import numpy as np

from z4lattice.errors import CapacityError, DomainError, ParseError

JWE_CAPACITY = 1 << 26


def _rref(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F2 and the pivot columns."""
    m = m.copy() % 2
    pivots: list[int] = []
    r = 0
    rows, cols = m.shape
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(m[r:, c])[0]
        if len(hits) == 0:
            continue
        p = r + hits[0]
        if p != r:
            m[[r, p]] = m[[p, r]]
        others = np.nonzero(m[:, c])[0]
        others = others[others != r]
        m[others] ^= m[r]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows) -> int:
    m = np.asarray(rows, dtype=np.uint8)
    if m.size == 0:
        return 0
    return len(_rref(m)[1])


def _independent_rows(rows: np.ndarray) -> np.ndarray:
    """Greedy subset of rows (in input order) that is linearly independent."""
    kept: list[np.ndarray] = []
    basis = np.zeros((0, rows.shape[1]), dtype=np.uint8)
    for row in rows:
        trial = np.vstack([basis, row[None, :]])
        if rank(trial) > len(basis):
            kept.append(row)
            basis = trial
    return np.array(kept, dtype=np.uint8).reshape(len(kept), rows.shape[1])


@dataclass(frozen=True)
class F2Code:
    """Binary linear [n, 2^k] code given by k independent basis rows."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: int | None = None) -> F2Code:
        """Build a code from spanning rows; dependent rows are dropped, order kept."""
        rows = [list(r) for r in rows]
        if n is None:
            if not rows:
                raise DomainError("length n is required for an empty generator list")
            n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise DomainError("ragged generator rows")
        if any(x not in (0, 1) for r in rows for x in r):
            raise DomainError("binary code entries must be 0 or 1")
        m = np.array(rows, dtype=np.uint8).reshape(len(rows), n)
        kept = _independent_rows(m) if len(m) else m
        return cls(n=n, rows=tuple(tuple(int(x) for x in r) for r in kept))

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def cardinality(self) -> int:
        return 2**self.k

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.uint8).reshape(self.k, self.n)

    def contains(self, v: Sequence[int]) -> bool:
        m = np.vstack([self.matrix, np.asarray(v, dtype=np.uint8)[None, :] % 2])
        return rank(m) == self.k

    def contains_code(self, other: F2Code) -> bool:
        if other.n != self.n:
            return False
        return rank(np.vstack([self.matrix, other.matrix])) == self.k

    def same_code(self, other: F2Code) -> bool:
        return self.k == other.k and self.contains_code(other)

    def codewords(self) -> np.ndarray:
        """All 2^k codewords as a (2^k, n) uint8 array, lexicographic in the message."""
        k = self.k
        msgs = (np.arange(2**k, dtype=np.int64)[:, None] >> np.arange(k - 1, -1, -1)) & 1
        return ((msgs @ self.matrix.astype(np.int64)) % 2).astype(np.uint8)

    def to_text(self) -> str:
        lines = [f"F2 {self.n} {self.k}"] + [" ".join(map(str, r)) for r in self.rows]
        return "\n".join(lines) + "\n"


def zero_code(n: int) -> F2Code:
    return F2Code(n=n, rows=())


def full_code(n: int) -> F2Code:
    return F2Code.from_rows(np.eye(n, dtype=int).tolist())


def parse_f2_code(text: str) -> F2Code:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or lines[0][0] != "F2" or len(lines[0]) != 3:
        raise ParseError("expected header 'F2 <n> <k>'")
    try:
        n, k = int(lines[0][1]), int(lines[0][2])
        rows = [[int(x) for x in ln] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"non-integer entry: {exc}") from None
    if len(rows) != k:
        raise ParseError(f"header announces {k} rows, found {len(rows)}")
    if any(len(r) != n for r in rows) or any(x not in (0, 1) for r in rows for x in r):
        raise ParseError(f"rows must hold {n} bits each")
    return F2Code.from_rows(rows, n=n)


def dual(code: F2Code) -> F2Code:
    """Parity-check code: null space of the generator matrix."""
    n = code.n
    if code.k == 0:
        return full_code(n)
    r, pivots = _rref(code.matrix)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(n, dtype=np.uint8)
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = r[i, f]
        basis.append(v)
    return F2Code.from_rows(basis, n=n) if basis else zero_code(n)


def weight_enumerator(code: F2Code):
    """W(x, y) = sum over codewords of x^(n - wt) y^wt."""
    from z4lattice.enumerators import WePolynomial, binary_macwilliams

    n = code.n
    if code.k > n - code.k and code.k > 16:
        d = dual(code)
        return binary_macwilliams(weight_enumerator(d), code.cardinality)
    weights = code.codewords().sum(axis=1, dtype=np.int64)
    counts = np.bincount(weights, minlength=n + 1)
    return WePolynomial(n, {(n - w, w): int(c) for w, c in enumerate(counts) if c})


def joint_weight_enumerator(c1: F2Code, c2: F2Code, capacity: int = JWE_CAPACITY):
    """jwe(a, b, c, d): exponents count coordinate pairs (0,0), (0,1), (1,0), (1,1)."""
    from z4lattice.enumerators import JwePolynomial

    if c1.n != c2.n:
        raise DomainError(f"length mismatch: {c1.n} vs {c2.n}")
    if c1.cardinality * c2.cardinality > capacity:
        raise CapacityError(
            f"jwe needs {c1.cardinality * c2.cardinality} codeword pairs, capacity is {capacity}"
        )
    n = c1.n
    w1 = c1.codewords().astype(np.int64)
    w2 = c2.codewords().astype(np.int64)
    wt1 = w1.sum(axis=1)
    wt2 = w2.sum(axis=1)
    terms: Counter = Counter()
    for x, wx in zip(w1, wt1):
        d11 = w2 @ x
        d10 = wx - d11
        d01 = wt2 - d11
        d00 = n - d11 - d10 - d01
        keys = np.stack([d00, d01, np.broadcast_to(d10, d11.shape), d11], axis=1)
        uniq, cnt = np.unique(keys, axis=0, return_counts=True)
        for key, c in zip(uniq, cnt):
            terms[tuple(int(v) for v in key)] += int(c)
    return JwePolynomial(n, dict(terms))


def _monomials(r: int, m: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for deg in range(r + 1):
        out.extend(itertools.combinations(range(m), deg))
    return out


def reed_muller(r: int, m: int) -> F2Code:
    """R(r, m): evaluations of Boolean monomials of degree <= r on F2^m.

    Point ``j`` (0 <= j < 2^m) assigns x_i the value of bit i of j, so x_i
    changes value every 2^i positions.  Rows are graded-lexicographic in the
    variable subsets.
    """
    if m < 0 or r < 0 or r > m:
        raise DomainError(f"Reed-Muller needs 0 <= r <= m, got r={r}, m={m}")
    points = (np.arange(2**m)[:, None] >> np.arange(m)) & 1
    rows = []
    for mono in _monomials(r, m):
        if mono:
            rows.append(np.prod(points[:, list(mono)], axis=1))
        else:
            rows.append(np.ones(2**m, dtype=np.int64))
    code = F2Code.from_rows(np.array(rows, dtype=np.uint8).tolist(), n=2**m)
    assert code.k == sum(comb(m, i) for i in range(r + 1))
    return code


def schur_witness(c1: F2Code, c2: F2Code) -> tuple[int, int] | int | None:
    """First obstruction to closure of the chain C1 <= C2, or ``None``.

    Returns an int (row of C1 not in C2) for a containment failure, or a
    pair ``(i, j)`` of C1 basis rows whose element-wise product leaves C2.
    """
    if c1.n != c2.n:
        raise DomainError(f"length mismatch: {c1.n} vs {c2.n}")
    g = c1.matrix
    for i, row in enumerate(g):
        if not c2.contains(row):
            return i
    for i in range(len(g)):
        for j in range(i + 1, len(g)):
            if not c2.contains(g[i] & g[j]):
                return (i, j)
    return None


def schur_closed(c1: F2Code, c2: F2Code) -> bool:
    """True iff C1 <= C2 and x*y lies in C2 for all x, y in C1.

    Checking products of basis rows suffices by bilinearity over F2.
    """
    return schur_witness(c1, c2) is None
