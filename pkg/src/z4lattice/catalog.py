"""Codes and enumerators with printed data, addressable by name."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Literal

from z4lattice.constructions import lift_c1_2c2
from z4lattice.enumerators import SwePolynomial, swe_from_code
from z4lattice.errors import DomainError
from z4lattice.f2core import F2Code, reed_muller
from z4lattice.z4core import Z4Code, standard_form

Kind = Literal["z4-generator", "binary-pair", "swe-only"]

OCTACODE_B = (
    (3, 1, 2, 1),
    (1, 2, 3, 1),
    (3, 3, 3, 2),
    (2, 3, 1, 1),
)

C12_G1 = (
    (1, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1),
    (0, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1),
)

C12_G2 = (
    (1, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1),
    (0, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
    (0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0),
    (0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1),
    (0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1),
    (0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0),
    (0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 1, 1),
)

# swe of C8 as printed, exponents (a, b, c)
C8_SWE_TERMS = {
    (0, 0, 8): 1,
    (0, 8, 0): 64,
    (1, 2, 5): 12,
    (1, 6, 1): 64,
    (2, 0, 6): 16,
    (3, 2, 3): 40,
    (4, 0, 4): 30,
    (5, 2, 1): 12,
    (6, 0, 2): 16,
    (8, 0, 0): 1,
}

# swe of C12 = C1 + 2C2 as printed (16 monomials; see C12_SWE_PRINTED_NOTE)
C12_SWE_PRINTED = {
    (12, 0, 0): 1,
    (2, 8, 2): 1152,
    (3, 8, 1): 768,
    (4, 8, 0): 192,
    (10, 0, 2): 18,
    (9, 0, 3): 64,
    (8, 4, 0): 111,
    (7, 0, 5): 192,
    (6, 0, 6): 252,
    (5, 0, 7): 192,
    (4, 0, 8): 111,
    (3, 0, 9): 64,
    (2, 0, 10): 18,
    (1, 8, 3): 768,
    (0, 8, 4): 192,
    (0, 0, 12): 1,
}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: Kind
    payload: Z4Code | tuple[F2Code, F2Code] | SwePolynomial
    expected_gain: float | None
    provenance: str

    @property
    def n(self) -> int:
        if isinstance(self.payload, tuple):
            return self.payload[0].n
        return self.payload.n

    def code(self) -> Z4Code:
        """The Z4 code of the entry (lifting binary pairs)."""
        if isinstance(self.payload, Z4Code):
            return self.payload
        if isinstance(self.payload, tuple):
            return lift_c1_2c2(*self.payload)
        raise DomainError(f"catalog entry {self.name} carries only an swe, no generator matrix")

    def swe(self, budget: int | None = None, threads: int = 1) -> SwePolynomial:
        if isinstance(self.payload, SwePolynomial):
            return self.payload
        return _cached_swe(self.name, budget, threads) if budget is None else swe_from_code(
            self.code(), budget=budget, threads=threads
        )


@cache
def _cached_swe(name: str, budget, threads: int) -> SwePolynomial:
    return swe_from_code(get(name).code(), budget=budget, threads=threads)


def octacode() -> Z4Code:
    rows = [[1 if i == j else 0 for j in range(4)] + list(OCTACODE_B[i]) for i in range(4)]
    return standard_form(rows)


def c12_pair() -> tuple[F2Code, F2Code]:
    return F2Code.from_rows(C12_G1), F2Code.from_rows(C12_G2)


def c8_swe() -> SwePolynomial:
    swe = SwePolynomial(8, C8_SWE_TERMS)
    assert swe.mass == 256
    return swe


@cache
def _entries() -> dict[str, CatalogEntry]:
    return {
        "O8": CatalogEntry("O8", "z4-generator", octacode(), 1.333, "octacode, generator (I4 | B)"),
        "C8": CatalogEntry("C8", "swe-only", c8_swe(), 1.282, "formally self-dual length-8 code, printed swe"),
        "C12": CatalogEntry("C12", "binary-pair", c12_pair(), 1.6, "C1 + 2C2 with the [12,2] and [12,10] pair"),
        "RM16": CatalogEntry(
            "RM16", "binary-pair", (reed_muller(1, 4), reed_muller(2, 4)), 1.778, "R(1,4) + 2R(2,4)"
        ),
        "RM32": CatalogEntry(
            "RM32", "binary-pair", (reed_muller(1, 5), reed_muller(3, 5)), 7.11, "R(1,5) + 2R(3,5)"
        ),
    }


def get(name: str) -> CatalogEntry:
    entries = _entries()
    if name not in entries:
        raise DomainError(f"unknown catalog entry {name!r}; available: {', '.join(entries)}")
    return entries[name]


def list_entries() -> list[tuple[str, Kind, float | None]]:
    return [(e.name, e.kind, e.expected_gain) for e in _entries().values()]


@dataclass(frozen=True)
class TableRow:
    params: str
    reference: str
    printed_gain: float
    best_known: float
    catalog_name: str | None


# Rows of the comparison table; codes without printed generator data carry no catalog entry.
TABLE_I = (
    TableRow("[6,2^6,4]^fsd", "Gulliver-Harada p.125", 1.172, 1.172, None),
    TableRow("[8,2^8,6]^sd", "octacode", 1.333, 1.333, "O8"),
    TableRow("[10,2^10,6]^fsd", "Gulliver-Harada p.127", 1.379, 1.478, None),
    TableRow("[12,2^12,6]^fsd", "Conway-Sloane", 1.456, 1.657, None),
    TableRow("[12,2^12,4]^fsd", "C1+2C2 pair", 1.6, 1.657, "C12"),
    TableRow("[14,2^14,8]^fsd", "Gulliver-Harada p.125", 1.871, 1.875, None),
    TableRow("[16,2^16,8]^sd", "R(1,4)+2R(2,4)", 1.778, 2.141, "RM16"),
    TableRow("[22,2^22,10]^fsd", "Bachoc-Gulliver-Harada p.230", 3.403, 3.335, None),
    TableRow("[24,2^24,12]^sd", "Huffman-Pless p.494", 4.063, 4.063, None),
)
