"""Exact sparse enumerator polynomials and their MacWilliams transforms.

All three enumerators are homogeneous polynomials of degree ``n`` with
nonnegative integer coefficients, stored as ``{exponent tuple: coefficient}``
maps kept sorted by exponent.  Linear substitutions are expanded exactly with
Python integers: the first variable is dehomogenised to 1, the remaining ones
index a dense object array, and each monomial is folded in by a Horner scheme
that only ever multiplies by an affine form (a shift-and-add).
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from typing import ClassVar

import numpy as np

from z4lattice.errors import CapacityError, DomainError, ParseError
from z4lattice.z4core import Z4Code

DEFAULT_BUDGET = 1 << 33


class Enumerator:
    """Homogeneous polynomial with integer coefficients in ``nvars`` variables."""

    nvars: ClassVar[int]
    tag: ClassVar[str]

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], int]):
        clean: dict[tuple[int, ...], int] = {}
        for exps, coeff in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars:
                raise DomainError(f"{self.tag} exponents need {self.nvars} entries, got {exps}")
            if sum(exps) != n or min(exps) < 0:
                raise DomainError(f"{self.tag} term {exps} is not homogeneous of degree {n}")
            coeff = int(coeff)
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
        self.n = n
        self.terms = dict(sorted((k, v) for k, v in clean.items() if v))

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.tag, self.n, tuple(self.terms.items())))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, terms={self.terms})"

    @property
    def mass(self) -> int:
        return sum(self.terms.values())

    def __getitem__(self, exps: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exps), 0)

    def __call__(self, *values: float) -> float:
        return self.evaluate(*values)

    def evaluate(self, *values: float) -> float:
        if len(values) != self.nvars:
            raise DomainError(f"{self.tag} takes {self.nvars} values")
        exps = np.array(list(self.terms), dtype=np.float64).reshape(-1, self.nvars)
        coeffs = np.array([float(c) for c in self.terms.values()])
        vals = np.asarray(values, dtype=np.float64)
        return float(np.sum(coeffs * np.prod(vals[None, :] ** exps, axis=1)))

    def substitute(self, forms: Sequence[Sequence[int]]) -> dict[tuple[int, ...], int]:
        """Expand ``p(L_1, ..., L_v)`` exactly; ``forms[i]`` holds the integer
        coefficients of ``L_i`` in the original variables."""
        return _substitute(self.terms, forms, self.n, self.nvars)

    def to_text(self) -> str:
        lines = [f"{self.tag} {self.n} {self.mass}"]
        lines += [" ".join([str(c), *map(str, e)]) for e, c in self.terms.items()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str):
        lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines or lines[0][0] != cls.tag or len(lines[0]) != 3:
            raise ParseError(f"expected header '{cls.tag} <n> <mass>'")
        try:
            n, mass = int(lines[0][1]), int(lines[0][2])
            terms: dict[tuple[int, ...], int] = {}
            for ln in lines[1:]:
                if len(ln) != cls.nvars + 1:
                    raise ParseError(f"term line needs {cls.nvars + 1} integers: {' '.join(ln)}")
                key = tuple(int(x) for x in ln[1:])
                terms[key] = terms.get(key, 0) + int(ln[0])
        except ValueError as exc:
            raise ParseError(f"non-integer entry: {exc}") from None
        try:
            poly = cls(n, terms)
        except DomainError as exc:
            raise ParseError(str(exc)) from None
        if poly.mass != mass:
            raise ParseError(f"header mass {mass} does not match term sum {poly.mass}")
        return poly


class SwePolynomial(Enumerator):
    """swe(a, b, c): exponents are (n0, n1 + n3, n2)."""

    nvars = 3
    tag = "SWE"


class WePolynomial(Enumerator):
    """W(x, y): exponents are (n - wt, wt)."""

    nvars = 2
    tag = "WE"


class JwePolynomial(Enumerator):
    """jwe(a, b, c, d): exponents are (d00, d01, d10, d11)."""

    nvars = 4
    tag = "JWE"


def parse_enumerator(text: str) -> Enumerator:
    head = text.lstrip().split(maxsplit=1)
    kinds = {cls.tag: cls for cls in (SwePolynomial, WePolynomial, JwePolynomial)}
    if not head or head[0] not in kinds:
        raise ParseError("expected a SWE, WE or JWE header")
    return kinds[head[0]].from_text(text)


def _mul_affine(arr: np.ndarray, form: Sequence[int]) -> np.ndarray:
    """Multiply a dehomogenised polynomial by ``form[0] + sum form[m] y_m``."""
    out = arr * form[0] if form[0] else np.zeros_like(arr)
    for axis, coef in enumerate(form[1:]):
        if not coef:
            continue
        src = [slice(None)] * arr.ndim
        dst = [slice(None)] * arr.ndim
        src[axis] = slice(0, -1)
        dst[axis] = slice(1, None)
        out[tuple(dst)] = out[tuple(dst)] + coef * arr[tuple(src)]
    return out


def _substitute(terms, forms, n: int, nvars: int) -> dict[tuple[int, ...], int]:
    if len(forms) != nvars or any(len(f) != nvars for f in forms):
        raise DomainError("substitution needs one linear form per variable")
    shape = (n + 1,) * (nvars - 1)
    zero = np.zeros(shape, dtype=object)
    zero[...] = 0

    def horner(group: dict[tuple[int, ...], int], var: int) -> np.ndarray:
        if var < 0:
            acc = zero.copy()
            acc[(0,) * (nvars - 1)] = sum(group.values())
            return acc
        by_exp: dict[int, dict[tuple[int, ...], int]] = {}
        for exps, c in group.items():
            by_exp.setdefault(exps[var], {})[exps[:var]] = c
        acc = None
        for e in range(max(by_exp), -1, -1):
            if acc is not None:
                acc = _mul_affine(acc, forms[var])
            if e in by_exp:
                sub = horner(by_exp[e], var - 1)
                acc = sub if acc is None else acc + sub
        return acc

    dense = horner(dict(terms), nvars - 1)
    out: dict[tuple[int, ...], int] = {}
    for idx in zip(*np.nonzero(dense != 0)):
        rest = tuple(int(i) for i in idx)
        lead = n - sum(rest)
        if lead < 0:
            raise DomainError("substitution produced a term above the homogeneous degree")
        out[(lead, *rest)] = int(dense[idx])
    return out


def _scaled(cls, n: int, raw: dict[tuple[int, ...], int], divisor: int):
    terms = {}
    for exps, c in raw.items():
        q, r = divmod(c, divisor)
        if r:
            raise DomainError(
                f"coefficient {c} of {exps} is not divisible by {divisor}: inconsistent input"
            )
        terms[exps] = q
    return cls(n, terms)


def _check_dual_cardinality(q: int, n: int, mass: int, dual_cardinality: int | None) -> None:
    if mass <= 0 or q**n % mass:
        raise DomainError(f"mass {mass} does not divide {q}^{n}: not a code enumerator")
    if dual_cardinality is not None and dual_cardinality * mass != q**n:
        raise DomainError(
            f"dual cardinality {dual_cardinality} inconsistent with mass {mass} (need {q}^{n}/mass)"
        )


# Kernels of the MacWilliams transforms, one row per substituted variable.
SWE_KERNEL = ((1, 2, 1), (1, 0, -1), (1, -2, 1))
WE_KERNEL = ((1, 1), (1, -1))
JWE_KERNEL = ((1, 1, 1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1))


def macwilliams_swe(p: SwePolynomial, dual_cardinality: int | None = None) -> SwePolynomial:
    """swe of the dual code: p(a+2b+c, a-c, a-2b+c) / |C|.

    ``dual_cardinality``, when given, must equal 4^n / mass(p); the output
    mass always equals it.
    """
    _check_dual_cardinality(4, p.n, p.mass, dual_cardinality)
    return _scaled(SwePolynomial, p.n, p.substitute(SWE_KERNEL), p.mass)


def binary_macwilliams(p: WePolynomial, dual_cardinality: int | None = None) -> WePolynomial:
    """Weight enumerator of the dual binary code: p(x+y, x-y) / |C|."""
    _check_dual_cardinality(2, p.n, p.mass, dual_cardinality)
    return _scaled(WePolynomial, p.n, p.substitute(WE_KERNEL), p.mass)


def macwilliams_jwe(
    j: JwePolynomial, c1_dual_card: int | None = None, c2_dual_card: int | None = None
) -> JwePolynomial:
    """j(a+b+c+d, a+b-c-d, a-b+c-d, a-b-c+d) / (|C1||C2|).

    For ``j = jwe(C1, C2)`` the result is ``jwe(C2^perp, C1^perp)``: the
    enumerator of the pair whose lift C2^perp + 2 C1^perp is the Z4 dual of
    C1 + 2 C2.
    """
    dual_product = None
    if c1_dual_card is not None and c2_dual_card is not None:
        dual_product = c1_dual_card * c2_dual_card
    _check_dual_cardinality(4, j.n, j.mass, dual_product)
    return _scaled(JwePolynomial, j.n, j.substitute(JWE_KERNEL), j.mass)


def is_formally_self_dual(p: SwePolynomial) -> bool:
    """True iff p equals its own MacWilliams transform."""
    if p.mass * p.mass != 4**p.n:
        return False
    try:
        return macwilliams_swe(p) == p
    except DomainError:
        return False


def swe_from_jwe(j: JwePolynomial) -> SwePolynomial:
    """swe of C1 + 2C2 from jwe(C1, C2): substitute (a, c, b, b)."""
    terms: dict[tuple[int, int, int], int] = {}
    for (d00, d01, d10, d11), c in j.terms.items():
        key = (d00, d10 + d11, d01)
        terms[key] = terms.get(key, 0) + c
    return SwePolynomial(j.n, terms)


def jwe_swap(j: JwePolynomial) -> JwePolynomial:
    """jwe(C2, C1) from jwe(C1, C2): exchange the roles of b and c."""
    return JwePolynomial(j.n, {(a, c, b, d): v for (a, b, c, d), v in j.terms.items()})


def swe_from_histogram(n: int, hist: np.ndarray) -> SwePolynomial:
    terms = {}
    for n13, n2 in zip(*np.nonzero(hist)):
        terms[(n - int(n13) - int(n2), int(n13), int(n2))] = int(hist[n13, n2])
    return SwePolynomial(n, terms)


def swe_from_code(code: Z4Code, budget: int | None = None, threads: int = 1) -> SwePolynomial:
    """Exact swe by bit-sliced enumeration of all 4^k1 2^k2 codewords."""
    from z4lattice.bitslice import symbol_histogram

    budget = DEFAULT_BUDGET if budget is None else budget
    if code.cardinality > budget:
        raise CapacityError(
            f"code has {code.cardinality} codewords, enumeration budget is {budget}"
        )
    return swe_from_histogram(code.n, symbol_histogram(code, threads=threads))


def swe_reference(code: Z4Code, budget: int = 1 << 22) -> SwePolynomial:
    """Slow swe straight from the codeword stream (test oracle)."""
    from z4lattice.z4core import codeword_array

    if code.cardinality > budget:
        raise CapacityError(f"reference enumeration limited to {budget} codewords")
    terms: dict[tuple[int, int, int], int] = {}
    chunk = 1 << 16
    for lo in range(0, code.cardinality, chunk):
        words = codeword_array(code, lo, lo + chunk)
        n0 = (words == 0).sum(axis=1)
        n13 = (words % 2 == 1).sum(axis=1)
        n2 = (words == 2).sum(axis=1)
        keys, counts = np.unique(np.stack([n0, n13, n2], axis=1), axis=0, return_counts=True)
        for key, c in zip(keys, counts):
            k = tuple(int(x) for x in key)
            terms[k] = terms.get(k, 0) + int(c)
    return SwePolynomial(code.n, terms)
