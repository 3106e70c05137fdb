#!/usr/bin/env python3
"""Regenerates the Riemann-Siegel correction-term coefficient tables.

The Hardy Z evaluation uses the remainder expansion

    Z(t) = 2 * sum_{n<=nu} n^{-1/2} cos(theta(t) - t ln n)
         + (-1)^(nu-1) * a^(-1/2) * sum_j C_j(p) * a^(-j),

with a = sqrt(t / 2 pi), nu = floor(a), p = a - nu. The C_j(p) are extracted
numerically: for each p on a Chebyshev grid, Z(t) is evaluated with mpmath at
a ladder of heights sharing the fractional part p, and the coefficients are
recovered by solving the Vandermonde system in 1/a at 80 digits. The leading
coefficient has the closed form

    C_0(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p),

which is used to validate the extraction before anything is written.

Run from the repository root:

    python3 tools/gen_rs_coeffs.py

Output: crates/core/const_table/rs_correction_cheb.rs
(Chebyshev coefficients of C_0..C_4 on p in [0, 1]).
"""
import time

import mpmath as mp

T0 = time.time()
mp.mp.dps = 80

N_CHEB = 40          # Chebyshev nodes on [0,1]
ORDERS = 9           # unknowns C_0..C_8 (C_5.. are discarded as nuisance)
KEEP = 5             # tables emitted for C_0..C_4
NUS = [48, 68, 96, 136, 192, 272, 384, 543, 768]
assert len(NUS) == ORDERS


def log(msg):
    print(f"[{time.time()-T0:7.1f}s] {msg}", flush=True)


def psi_closed(p):
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


def main_sum(t, nu, th):
    return 2 * mp.fsum(mp.cos(th - t * mp.log(n)) / mp.sqrt(n)
                       for n in range(1, nu + 1))


def extract_at(p):
    """Solve for [C_0(p), ..., C_{ORDERS-1}(p)]."""
    rows, rhs = [], []
    for nu in NUS:
        a = nu + p
        t = 2 * mp.pi * a * a
        th = mp.siegeltheta(t)
        z = mp.siegelz(t)
        resid = (z - main_sum(t, nu, th)) * (-1) ** (nu - 1) * mp.sqrt(a)
        rows.append([a ** (-j) for j in range(ORDERS)])
        rhs.append(resid)
    sol = mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))
    return list(sol)


log(f"extracting C_0..C_{ORDERS-1} at {N_CHEB} Chebyshev nodes")
nodes = [(mp.cos(mp.pi * (2 * k + 1) / (2 * N_CHEB)) + 1) / 2
         for k in range(N_CHEB)]
values = [[mp.mpf(0)] * N_CHEB for _ in range(ORDERS)]
max_c0_err = mp.mpf(0)
for k, p in enumerate(nodes):
    cs = extract_at(p)
    err = abs(cs[0] - psi_closed(p))
    max_c0_err = max(max_c0_err, err)
    for j in range(ORDERS):
        values[j][k] = cs[j]
    if k % 8 == 0:
        log(f"node {k}: p={mp.nstr(p, 8)} C0 err vs closed form = {mp.nstr(err, 3)}")

log(f"max C0 extraction error vs closed form: {mp.nstr(max_c0_err, 3)}")
assert max_c0_err < mp.mpf("1e-25"), "extraction inconsistent with closed form"


def cheb_coeffs(vals):
    """Chebyshev interpolation coefficients from values at the N_CHEB nodes."""
    n = len(vals)
    out = []
    for m in range(n):
        acc = mp.fsum(vals[k] * mp.cos(mp.pi * m * (2 * k + 1) / (2 * n))
                      for k in range(n))
        out.append(acc * (1 if m == 0 else 2) / n)
    return out


log("fitting Chebyshev series")
tables = []
for j in range(KEEP):
    coeffs = cheb_coeffs(values[j])
    # trim trailing coefficients below 1e-19
    last = max(i for i, c in enumerate(coeffs) if abs(c) > mp.mpf("1e-19"))
    tables.append(coeffs[:last + 1])
    log(f"C_{j}: {last+1} coefficients, tail {mp.nstr(abs(coeffs[last]), 3)}")

# ------------------------------------------------------- validation
log("validating reconstructed Z against mpmath")


def cheb_eval(coeffs, p):
    x = 2 * p - 1
    b0 = b1 = mp.mpf(0)
    for c in reversed(coeffs[1:]):
        b0, b1 = 2 * x * b0 - b1 + c, b0
    return x * b0 - b1 + coeffs[0]


import random
rng = random.Random(7)
worst = mp.mpf(0)
for _ in range(60):
    t = mp.mpf(rng.uniform(200.0, 30000.0))
    a = mp.sqrt(t / (2 * mp.pi))
    nu = int(mp.floor(a))
    p = a - nu
    th = mp.siegeltheta(t)
    corr = mp.fsum(cheb_eval(tables[j], p) * a ** (-j) for j in range(KEEP))
    zrec = main_sum(t, nu, th) + (-1) ** (nu - 1) / mp.sqrt(a) * corr
    err = abs(zrec - mp.siegelz(t))
    worst = max(worst, err)
log(f"max |Z_reconstructed - Z_mpmath| over random t in [200, 30000]: {mp.nstr(worst, 3)}")
# the discarded C_5.. nuisance orders contribute ~1e-11 near the low end
assert worst < mp.mpf("1e-10"), "reconstruction too inaccurate"


def f(x):
    return mp.nstr(mp.mpf(x), 22, strip_zeros=False)


log("writing crates/core/const_table/rs_correction_cheb.rs")
with open("crates/core/const_table/rs_correction_cheb.rs", "w") as out:
    out.write("// Generated by tools/gen_rs_coeffs.py (mpmath, 80 digits)."
              " Do not edit by hand.\n")
    out.write("// Chebyshev coefficients (argument 2p-1) of the Riemann-Siegel\n")
    out.write("// correction terms C_0..C_4 on p in [0, 1].\n")
    out.write("(\n")
    for j, tab in enumerate(tables):
        out.write(f"    // C_{j}\n")
        out.write("    &[\n")
        for c in tab:
            out.write(f"        {f(c)},\n")
        out.write("    ],\n")
    out.write(")\n")
log("done")
