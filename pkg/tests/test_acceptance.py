"""Acceptance checks, one printed PASS/FAIL line each.

Run under pytest (lines appear in the -v output) or directly with
``python tests/test_acceptance.py``.  The RM32 check enumerates 2^32
codewords and only runs when Z4LATTICE_RM32=1.
"""

from __future__ import annotations

import math
import os
import sys
import time

import numpy as np
import pytest

from z4lattice import catalog
from z4lattice.constructions import dual_of_lift, lift_c1_2c2, rm_unimodular, theorem3_check
from z4lattice.enumerators import (
    SwePolynomial,
    binary_macwilliams,
    is_formally_self_dual,
    macwilliams_jwe,
    macwilliams_swe,
    swe_from_code,
)
from z4lattice.f2core import F2Code, dual as f2_dual, joint_weight_enumerator, schur_closed, weight_enumerator
from z4lattice.secrecy import h_eval, secrecy_function, secrecy_gain, tau_to_t
from z4lattice.theta import jacobi_theta, jacobi_transform_residual, q_expansion_a4, q_expansion_from_swe, theta_a4
from z4lattice.z4core import dual, min_lee_distance, standard_form

RM32_ENABLED = os.environ.get("Z4LATTICE_RM32") == "1"


def criterion_1():
    t0 = time.perf_counter()
    code = catalog.octacode()
    swe = swe_from_code(code)
    prof = secrecy_gain(swe)
    dt = time.perf_counter() - t0
    ok = (
        code.cardinality == 256
        and abs(prof.gain - 4 / 3) <= 1e-9
        and abs(prof.t_star - 2**-0.25) <= 1e-8
        and abs(prof.tau_star - 1) <= 1e-6
        and dt < 1
    )
    return ok, f"gain={prof.gain:.12f} t*={prof.t_star:.12f} tau*={prof.tau_star:.9f} time={dt:.3f}s"


def criterion_2():
    swe = swe_from_code(catalog.octacode())
    rng = np.random.default_rng(2024)
    ts = rng.uniform(0, 1, 100)
    ts = ts[(ts > 0) & (ts < 1)]
    err = float(np.max(np.abs(h_eval(swe, ts) - 256 * (1 - ts**4 + ts**8))))
    return len(ts) == 100 and err <= 1e-10, f"max |h - 256(1 - t^4 + t^8)| = {err:.2e} over {len(ts)} points"


def criterion_3():
    gain = secrecy_gain(catalog.get("C8").swe()).gain
    return abs(gain - 1.282) <= 5e-4, f"gain={gain:.9f} |diff|={abs(gain - 1.282):.2e}"


def criterion_4():
    t0 = time.perf_counter()
    c1, c2 = catalog.c12_pair()
    closed = schur_closed(c1, c2)
    code = lift_c1_2c2(c1, c2)
    swe = swe_from_code(code)
    t3 = theorem3_check(c1, c2)
    fsd = is_formally_self_dual(swe)
    dlee = min_lee_distance(code)
    gain = secrecy_gain(swe).gain
    dt = time.perf_counter() - t0
    # the printed polynomial has 16 monomials; 15 are compared, the a^8 b^4 entry is a transposed a^8 c^4
    printed = {k: v for k, v in catalog.C12_SWE_PRINTED.items() if k != (8, 4, 0)}
    match15 = all(swe[k] == v for k, v in printed.items())
    corrected = dict(printed)
    corrected[(8, 0, 4)] = catalog.C12_SWE_PRINTED[(8, 4, 0)]
    full = SwePolynomial(12, corrected) == swe
    ok = closed and t3 and fsd and dlee == 4 and match15 and full and abs(gain - 1.6) <= 5e-4 and dt < 1
    return ok, (
        f"closed={closed} we_criterion={t3} fsd={fsd} dLee={dlee} printed15={match15} "
        f"swe==printed(with a^8c^4)={full} gain={gain:.9f} time={dt:.3f}s"
    )


def criterion_5():
    t0 = time.perf_counter()
    code = rm_unimodular(4)
    swe = swe_from_code(code)
    gain = secrecy_gain(swe).gain
    dt = time.perf_counter() - t0
    ok = code.cardinality == 65536 and abs(gain - 1.778) <= 5e-4 and abs(gain - 16 / 9) <= 1e-9 and dt < 2
    return ok, f"codewords={code.cardinality} gain={gain:.12f} |gain-16/9|={abs(gain - 16 / 9):.1e} time={dt:.3f}s"


def criterion_6():
    threads = os.cpu_count() or 1
    t0 = time.perf_counter()
    code = rm_unimodular(5)
    swe = swe_from_code(code, budget=1 << 32, threads=threads)
    gain = secrecy_gain(swe).gain
    dt = time.perf_counter() - t0
    ok = code.cardinality == 2**32 and abs(gain - 7.11) <= 1e-2 and dt < 600
    return ok, f"codewords={code.cardinality} gain={gain:.9f} time={dt:.1f}s on {threads} threads"


def criterion_7():
    details = []
    ok = True
    for name in ("O8", "C12"):
        code = catalog.get(name).code()
        direct = q_expansion_a4(code, 6)
        formal = q_expansion_from_swe(swe_from_code(code), 6)
        same = direct.counts == formal.counts
        ok &= same
        details.append(f"{name}: {len(direct.counts)} norms equal={same}")
    kiss = q_expansion_a4(catalog.octacode(), 2).count(2)
    ok &= kiss == 240
    details.append(f"O8 norm-2 count={kiss}")
    return ok, "; ".join(details)


def _random_z4(rng, n):
    return standard_form(rng.integers(0, 4, (int(rng.integers(1, n + 1)), n)).tolist())


def _random_f2(rng, n):
    return F2Code.from_rows(rng.integers(0, 2, (int(rng.integers(0, n + 1)), n)).tolist(), n=n)


def _swe_ok(p):
    t = macwilliams_swe(p)
    return t.mass * p.mass == 4**p.n and macwilliams_swe(t) == p


def _we_ok(w):
    t = binary_macwilliams(w)
    return t.mass * w.mass == 2**w.n and binary_macwilliams(t) == w


def _jwe_ok(j):
    t = macwilliams_jwe(j)
    return t.mass * j.mass == 4**j.n and macwilliams_jwe(t) == j


def criterion_8():
    checked = 0
    ok = True
    # catalog codes (RM32 only when its swe is enabled)
    for name in ("O8", "C8", "C12", "RM16"):
        ok &= _swe_ok(catalog.get(name).swe())
        checked += 1
    for name in ("C12", "RM16", "RM32"):
        c1, c2 = catalog.get(name).payload
        ok &= _we_ok(weight_enumerator(c1)) and _we_ok(weight_enumerator(c2))
        if c1.cardinality * c2.cardinality <= 1 << 26:
            ok &= _jwe_ok(joint_weight_enumerator(c1, c2))
        checked += 1
    rng = np.random.default_rng(8)
    for _ in range(50):
        n = int(rng.integers(1, 11))
        ok &= _swe_ok(swe_from_code(_random_z4(rng, n)))
        ok &= _we_ok(weight_enumerator(_random_f2(rng, n)))
        ok &= _jwe_ok(joint_weight_enumerator(_random_f2(rng, n), _random_f2(rng, n)))
        checked += 1
    dual_ok = 0
    for _ in range(50):
        n = int(rng.integers(1, 13))
        code = _random_z4(rng, n)
        if macwilliams_swe(swe_from_code(code)) == swe_from_code(dual(code)):
            dual_ok += 1
    ok &= dual_ok == 50
    return ok, f"involution and mass checks on {checked} inputs; swe(dual) identity {dual_ok}/50 for n <= 12"


def criterion_9():
    worst6 = worst7 = 0.0
    for tau in (0.3, 1.0, 3.0):
        t2, t3, t4 = (jacobi_theta(k, tau) for k in (2, 3, 4))
        worst6 = max(worst6, abs(t3 + t4 - 2 * jacobi_theta(3, 4 * tau)), abs(t3 - t4 - 2 * jacobi_theta(2, 4 * tau)))
        worst7 = max(worst7, abs(t2**4 + t4**4 - t3**4))
    o8 = swe_from_code(catalog.octacode())
    c1, c2 = catalog.c12_pair()
    c12 = swe_from_code(lift_c1_2c2(c1, c2))
    c12d = swe_from_code(dual_of_lift(c1, c2))
    worst5 = 0.0
    for p, pd in ((o8, o8), (c12, c12d)):
        for tau in (0.7, 2.0):
            worst5 = max(worst5, abs(jacobi_transform_residual(p, pd, 1.0, tau)) / theta_a4(p, tau))
    ok = worst6 <= 1e-13 and worst7 <= 1e-13 and worst5 <= 1e-10
    return ok, f"duplication {worst6:.1e}, quartic {worst7:.1e}, Jacobi transform (relative) {worst5:.1e}"


def criterion_10():
    names = [n for n, _, _ in catalog.list_entries() if n != "RM32" or RM32_ENABLED]
    sym = route = 0.0
    tested = []
    for name in names:
        p = catalog.get(name).swe()
        if not is_formally_self_dual(p):
            continue
        tested.append(name)
        for tau in (0.3, 0.7, 2.0, 5.0):
            xi = secrecy_function(p, None, tau)
            sym = max(sym, abs(xi / secrecy_function(p, None, 1 / tau) - 1))
            via_h = h_eval(p, tau_to_t(tau)) / 2**p.n
            route = max(route, abs(1 / xi - via_h) * xi)
    ok = sym <= 1e-10 and route <= 1e-10
    return ok, f"entries {','.join(tested)}: symmetry {sym:.1e}, two routes (relative) {route:.1e}"


CRITERIA = {
    1: ("octacode pipeline", criterion_1),
    2: ("octacode h polynomial", criterion_2),
    3: ("C8 printed swe gain", criterion_3),
    4: ("C12 lift", criterion_4),
    5: ("RM16 gain", criterion_5),
    6: ("RM32 gain (stretch)", criterion_6),
    7: ("q-expansion oracles", criterion_7),
    8: ("MacWilliams suite", criterion_8),
    9: ("theta identities", criterion_9),
    10: ("secrecy symmetry and routes", criterion_10),
}


def _line(num, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {num} ({CRITERIA[num][0]}): {detail}"


@pytest.mark.parametrize("num", [n for n in CRITERIA if n != 6])
def test_criterion(num, capsys):
    ok, detail = CRITERIA[num][1]()
    with capsys.disabled():
        print("\n" + _line(num, ok, detail))
    assert ok, detail


@pytest.mark.slow
@pytest.mark.skipif(not RM32_ENABLED, reason="enumerates 2^32 codewords; set Z4LATTICE_RM32=1")
def test_criterion_rm32(capsys):
    ok, detail = criterion_6()
    with capsys.disabled():
        print("\n" + _line(6, ok, detail))
    assert ok, detail


def test_criterion_rm32_gate_reported(capsys):
    if not RM32_ENABLED:
        with capsys.disabled():
            print("\n[SKIP] criterion 6 (RM32 gain (stretch)): set Z4LATTICE_RM32=1 to enumerate 2^32 codewords")


def main() -> int:
    failed = 0
    for num, (_, fn) in CRITERIA.items():
        if num == 6 and not RM32_ENABLED:
            print("[SKIP] criterion 6 (RM32 gain (stretch)): set Z4LATTICE_RM32=1 to enumerate 2^32 codewords")
            continue
        ok, detail = fn()
        failed += not ok
        print(_line(num, ok, detail))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
