"""Bit-sliced symbol counting over the codewords of a Z4 code.

A Z4 vector is held as two bit-planes (``lo``, ``hi``) packed into uint64
words; symbol ``s`` has ``lo = s & 1`` and ``hi = s >> 1``.  In that layout

    n1 + n3 = popcount(lo)        n2 = popcount(~lo & hi)

so a whole block of codewords is classified with a few vectorised bit
operations.  Every codeword is written as ``u + 2v`` where ``u`` runs over the
Z4 sums of subsets of the order-4 generators and ``v`` over the binary span of
{lo-planes of the order-4 generators} and {binary parts of the order-2
generators}.  Adding ``2v`` only flips the ``hi`` plane, so the inner loop is
a table of XOR masks.  Both tables are laid out in reflected Gray-code order:
consecutive entries differ by a single generator.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from z4lattice.z4core import Z4Code

INNER_BLOCK_BITS = 20


def _pack(bits: np.ndarray) -> np.ndarray:
    """Pack a (..., n) 0/1 array into (..., W) uint64 words."""
    n = bits.shape[-1]
    words = (n + 63) // 64
    padded = np.zeros(bits.shape[:-1] + (words * 64,), dtype=np.uint8)
    padded[..., :n] = bits
    by = np.packbits(padded, axis=-1, bitorder="little")
    return by.view(np.uint64).reshape(bits.shape[:-1] + (words,))


def _z4_add(lo1, hi1, lo2, hi2):
    return lo1 ^ lo2, hi1 ^ hi2 ^ (lo1 & lo2)


def _gray_z4_table(lo_gens: np.ndarray, hi_gens: np.ndarray, words: int) -> tuple[np.ndarray, np.ndarray]:
    """Z4 sums of all subsets of the given generators, reflected Gray order."""
    lo = np.zeros((1, words), dtype=np.uint64)
    hi = np.zeros((1, words), dtype=np.uint64)
    for gl, gh in zip(lo_gens, hi_gens):
        rl, rh = _z4_add(lo[::-1], hi[::-1], gl[None, :], gh[None, :])
        lo = np.concatenate([lo, rl])
        hi = np.concatenate([hi, rh])
    return lo, hi


def _gray_xor_table(gens: np.ndarray, words: int) -> np.ndarray:
    table = np.zeros((1, words), dtype=np.uint64)
    for g in gens:
        table = np.concatenate([table, table[::-1] ^ g[None, :]])
    return table


def _popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x).sum(axis=-1, dtype=np.int64)


class SymbolCounter:
    """Pre-packed tables for counting (n1+n3, n2) over a code.

    The outer index runs over subsets of order-4 generators; :meth:`count`
    accepts a slice of that index so callers can split work.
    """

    def __init__(self, code: Z4Code, inner_block_bits: int = INNER_BLOCK_BITS):
        self.n = code.n
        n = code.n
        self.words = (n + 63) // 64
        gen = code.generator.astype(np.uint8) if code.k1 + code.k2 else np.zeros((0, n), np.uint8)
        order4 = gen[: code.k1]
        order2 = gen[code.k1 :]
        lo4 = _pack(order4 & 1)
        hi4 = _pack(order4 >> 1)
        self.outer_lo, self.outer_hi = _gray_z4_table(lo4, hi4, self.words)
        inner_gens = np.concatenate([lo4, _pack(order2 >> 1)]) if len(gen) else lo4
        split = min(len(inner_gens), inner_block_bits)
        self.block = _gray_xor_table(inner_gens[:split], self.words)
        self.offsets = _gray_xor_table(inner_gens[split:], self.words)
        mask = np.zeros((n,), dtype=np.uint8)
        mask[:] = 1
        self.valid = _pack(mask)

    @property
    def outer_size(self) -> int:
        return len(self.outer_lo)

    def count(self, start: int = 0, stop: int | None = None) -> np.ndarray:
        """Histogram ``h[n13, n2]`` over codewords whose outer index is in range."""
        n = self.n
        stop = self.outer_size if stop is None else stop
        hist = np.zeros((n + 1, n + 1), dtype=np.int64)
        for o in range(start, stop):
            lo = self.outer_lo[o]
            hi = self.outer_hi[o]
            n13 = int(np.bitwise_count(lo).sum())
            zero_lo = ~lo & self.valid
            for off in self.offsets:
                plane = (self.block ^ (hi ^ off)[None, :]) & zero_lo[None, :]
                hist[n13] += np.bincount(_popcount(plane), minlength=n + 1)[: n + 1]
        return hist


def symbol_histogram(code: Z4Code, threads: int = 1) -> np.ndarray:
    """Return ``h[n13, n2]``: number of codewords with those symbol counts."""
    counter = SymbolCounter(code)
    size = counter.outer_size
    threads = max(1, min(threads, size))
    if threads == 1:
        return counter.count()
    bounds = np.linspace(0, size, threads + 1).astype(int)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(lambda ab: counter.count(*ab), zip(bounds[:-1], bounds[1:]))
        return sum(parts)
