"""Construction A4 lattices, 2-level Construction C packings and C1 + 2C2 lifts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from z4lattice import f2core
from z4lattice.errors import ClosureError, DomainError, ParseError
from z4lattice.f2core import F2Code, reed_muller, schur_witness, weight_enumerator
from z4lattice.z4core import Z4Code, standard_form


def hermite_normal_form(rows: list[list[int]]) -> list[list[int]]:
    """Lower-triangular row HNF of a full-column-rank integer matrix.

    Returns n rows spanning the same lattice: row i is zero beyond column i,
    has a positive diagonal entry, and entries left of the diagonal are
    reduced into [0, d_j) by the row owning column j.
    """
    work = [list(map(int, r)) for r in rows if any(r)]
    if not work:
        raise DomainError("HNF of an empty matrix")
    n = len(work[0])
    basis: list[list[int] | None] = [None] * n
    for col in range(n - 1, -1, -1):
        while True:
            nz = [r for r in work if r[col] != 0]
            if len(nz) <= 1:
                break
            pivot = min(nz, key=lambda r: abs(r[col]))
            for r in nz:
                if r is pivot:
                    continue
                q = r[col] // pivot[col]
                for j in range(col + 1):
                    r[j] -= q * pivot[j]
            work = [r for r in work if any(r)]
        nz = [r for r in work if r[col] != 0]
        if not nz:
            raise DomainError("matrix does not have full rank")
        row = nz[0]
        work = [r for r in work if r is not row]
        if row[col] < 0:
            row = [-x for x in row]
        basis[col] = row
    out = [list(b) for b in basis]  # type: ignore[arg-type]
    for i in range(n):
        for j in range(i - 1, -1, -1):
            q = out[i][j] // out[j][j]
            if q:
                out[i] = [x - q * y for x, y in zip(out[i], out[j])]
    return out


@dataclass(frozen=True)
class LatticeDescriptor:
    """Full-rank lattice with an exact rational row basis (lower-triangular HNF)."""

    n: int
    volume: Fraction
    basis: tuple[tuple[Fraction, ...], ...]
    source_code: Z4Code | None = None

    def gram(self) -> list[list[Fraction]]:
        return [[sum(a * b for a, b in zip(r, s)) for s in self.basis] for r in self.basis]

    def to_text(self) -> str:
        def fmt(x: Fraction) -> str:
            return f"{x.numerator}/{x.denominator}"

        lines = [f"LATTICE {self.n} {fmt(self.volume)}"]
        lines += [" ".join(fmt(x) for x in row) for row in self.basis]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> LatticeDescriptor:
        lines = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0][0] != "LATTICE" or len(lines[0]) != 3:
            raise ParseError("expected header 'LATTICE <n> <num>/<den>'")
        try:
            n = int(lines[0][1])
            vol = Fraction(lines[0][2])
            basis = tuple(tuple(Fraction(x) for x in ln) for ln in lines[1:])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational: {exc}") from None
        if len(basis) != n or any(len(r) != n for r in basis):
            raise ParseError(f"expected {n} rows of {n} rationals")
        return cls(n, vol, basis)


def construction_a4(code: Z4Code) -> LatticeDescriptor:
    """Lambda = (phi4(C) + 4Z^n) / 2, basis from the HNF of [G; 4I] halved."""
    n = code.n
    rows = code.generator.tolist() + (4 * np.eye(n, dtype=np.int64)).tolist()
    h = hermite_normal_form(rows)
    basis = tuple(tuple(Fraction(x, 2) for x in r) for r in h)
    vol = Fraction(1)
    for i in range(n):
        vol *= basis[i][i]
    assert vol == Fraction(2**n, code.cardinality)
    return LatticeDescriptor(n=n, volume=vol, basis=basis, source_code=code)


def _raise_closure(c1: F2Code, c2: F2Code) -> None:
    w = schur_witness(c1, c2)
    if w is None:
        return
    if isinstance(w, tuple):
        i, j = w
        raise ClosureError(
            f"chain not closed under the element-wise product: rows {i} and {j} of C1 "
            f"multiply to a word outside C2",
            witness=w,
        )
    raise ClosureError(f"C1 is not contained in C2: row {w} of C1 lies outside C2", row=w)


def basis_completion(c1: F2Code, c2: F2Code) -> list[tuple[int, ...]]:
    """Rows of C2, in order, that extend C1's basis to a basis of C2."""
    rows = [np.array(r, dtype=np.uint8) for r in c1.rows]
    extra: list[tuple[int, ...]] = []
    for r in c2.rows:
        trial = rows + [np.array(r, dtype=np.uint8)]
        if f2core.rank(np.array(trial)) > len(rows):
            rows = trial
            extra.append(r)
    return extra


def lift_c1_2c2(c1: F2Code, c2: F2Code) -> Z4Code:
    """Z4 code C1 + 2C2 from a Schur-closed chain C1 <= C2.

    Generators: C1's basis as order-4 rows, 2 * (completion of C1's basis to
    C2) as order-2 rows.
    """
    if c1.n != c2.n:
        raise DomainError(f"length mismatch: {c1.n} vs {c2.n}")
    _raise_closure(c1, c2)
    rows = [list(r) for r in c1.rows] + [[2 * x for x in r] for r in basis_completion(c1, c2)]
    if not rows:
        rows = [[0] * c1.n]
    code = standard_form(rows)
    assert (code.k1, code.k2) == (c1.k, c2.k - c1.k)
    return code


def dual_of_lift(c1: F2Code, c2: F2Code) -> Z4Code:
    """The Z4 code C2^perp + 2 C1^perp, offered as the dual of C1 + 2C2.

    It always has the dual's size and swe.  It equals the dual as a set only
    when every c1 in C1 and d in C2^perp have integer inner product 0 mod 4;
    compare with :func:`z4lattice.z4core.dual` when that matters.
    """
    _raise_closure(c1, c2)
    d2, d1 = f2core.dual(c2), f2core.dual(c1)
    w = schur_witness(d2, d1)
    if w is not None:
        raise ClosureError(
            "C2^perp + 2 C1^perp is not Z4-linear for this pair (C2^perp, C1^perp is not Schur-closed); "
            "use the algebraic dual instead",
            witness=w if isinstance(w, tuple) else None,
        )
    return lift_c1_2c2(d2, d1)


def theorem3_check(c1: F2Code, c2: F2Code) -> bool:
    """Sufficient condition for C1 + 2C2 to be formally self-dual:
    W_C1 = W_{C2^perp} and W_C2 = W_{C1^perp}."""
    _raise_closure(c1, c2)
    d1, d2 = f2core.dual(c1), f2core.dual(c2)
    return weight_enumerator(c1) == weight_enumerator(d2) and weight_enumerator(c2) == weight_enumerator(d1)


def rm_unimodular(m: int) -> Z4Code:
    """R(1, m) + 2R(m-2, m)."""
    if m < 3:
        raise DomainError(f"rm_unimodular needs m >= 3, got {m}")
    return lift_c1_2c2(reed_muller(1, m), reed_muller(m - 2, m))


@dataclass(frozen=True)
class PackingDescriptor:
    """The packing (C1 + 2C2 + 4Z^n)/2; a lattice exactly when the chain is Schur-closed."""

    n: int
    c1: F2Code
    c2: F2Code
    is_lattice: bool

    @property
    def coset_count(self) -> int:
        return self.c1.cardinality * self.c2.cardinality

    def jwe(self, capacity: int = f2core.JWE_CAPACITY):
        return f2core.joint_weight_enumerator(self.c1, self.c2, capacity=capacity)


def construction_c_packing(c1: F2Code, c2: F2Code) -> PackingDescriptor:
    if c1.n != c2.n:
        raise DomainError(f"length mismatch: {c1.n} vs {c2.n}")
    if not c2.contains_code(c1):
        raise ClosureError("2-level Construction C needs C1 contained in C2")
    return PackingDescriptor(n=c1.n, c1=c1, c2=c2, is_lattice=f2core.schur_closed(c1, c2))
