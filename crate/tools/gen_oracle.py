#!/usr/bin/env python3
"""Regenerates the frozen arbitrary-precision test fixtures.

Everything the Rust test suite pins against an external high-precision source
is produced here with mpmath (50 significant digits unless noted), then
written as Rust constant tables. Run from the repository root:

    python3 tools/gen_oracle.py

Outputs:
    crates/core/tests/common/oracle_data.rs
    crates/core/const_table/bernoulli_over_factorial.rs
"""
import random
import time

import mpmath as mp

T0 = time.time()
mp.mp.dps = 50


def f(x, digits=22):
    """Format an mpf as a Rust f64 literal with full double precision."""
    return mp.nstr(mp.mpf(x), digits, strip_zeros=False)


def log(msg):
    print(f"[{time.time()-T0:7.1f}s] {msg}", flush=True)


# ---------------------------------------------------------------- constants
log("constants")
EULER = mp.euler
LN_2PI = mp.log(2 * mp.pi)
consts = {
    "EULER": EULER,
    "ONE_MINUS_EULER": 1 - EULER,
    "LN_2PI": LN_2PI,
    "ZETA_HALF": mp.zeta(mp.mpf("0.5")),
    "ZETA_2": mp.zeta(2),
    "ZETA_3": mp.zeta(3),
    "ZETA_4": mp.zeta(4),
    "ZETA_8": mp.zeta(8),
    "ZETA_4_POW4_OVER_ZETA_8": mp.zeta(4) ** 4 / mp.zeta(8),
    "ZETA_4_OVER_ZETA_8": mp.zeta(4) / mp.zeta(8),
}

# ------------------------------------------------------- zeta sample points
# Frozen pseudo-random evaluation points for the Euler-Maclaurin route.
log("zeta sample points")
rng = random.Random(20260810)
zeta_pts = []
for _ in range(20):
    sigma = mp.mpf(rng.uniform(0.55, 3.0))
    t = mp.mpf(rng.uniform(0.0, 100.0))
    v = mp.zeta(mp.mpc(sigma, t))
    zeta_pts.append((sigma, t, v.real, v.imag))
for sigma, t in ((2, 0), (mp.mpf("0.5"), 0), (3, 0), (4, 0), (1, 37.0),
                 (mp.mpf("0.55"), 99.0), (mp.mpf("0.5"), 1000.0)):
    v = mp.zeta(mp.mpc(sigma, t))
    zeta_pts.append((mp.mpf(sigma), mp.mpf(t), v.real, v.imag))

# --------------------------------------------------------------- theta pins
log("theta pins")
theta_ts = [mp.mpf(x) for x in
            ("0.001", "0.1", "0.5", "1", "2", "5", "6.289836", "10",
             "14.1347251417", "30", "50", "100", "500", "1000", "10000",
             "100000")]
theta_pts = [(t, mp.siegeltheta(t)) for t in theta_ts]
theta_min_t = mp.findroot(lambda t: mp.diff(mp.siegeltheta, t), mp.mpf("6.3"))
theta_int_10 = mp.quad(mp.siegeltheta, [0, 10])
theta_int_30 = mp.quad(mp.siegeltheta, [0, 30])

# --------------------------------------------------------------- Hardy Z pins
log("hardy z pins")
z_ts = [mp.mpf(x) for x in
        (31, 35, 40, 47, 55, 65, 80, 100, 130, 170, 220, 280, 350, 450,
         600, 800, 1000, 1400, 2000, 3000, 5000, 8000, 12000, 20000, 30000)]
zrng = random.Random(1914)
z_ts += [mp.mpf(zrng.uniform(30.0, 10000.0)) for _ in range(25)]
z_pts = [(t, mp.siegelz(t)) for t in z_ts]

# ------------------------------------------------------------------- zeros
log("first zeros (zetazero)")
zeros50 = [mp.im(mp.zetazero(n)) for n in range(1, 51)]

# ---------------------------------------------------- zeros up to 1000 for S1
# Scan + bisect on siegelz at modest precision, then Newton-polish.
log("zeros to 1000 (scan)")
mp.mp.dps = 20


def zeros_upto(hi):
    out = []
    step = mp.mpf("0.08")
    t = mp.mpf(14)
    f_prev = mp.siegelz(t)
    while t < hi:
        t2 = t + step
        f_cur = mp.siegelz(t2)
        if f_prev * f_cur < 0:
            a, b, fa = t, t2, f_prev
            for _ in range(70):
                m = (a + b) / 2
                fm = mp.siegelz(m)
                if fa * fm <= 0:
                    b = m
                else:
                    a, fa = m, fm
                if b - a < mp.mpf("1e-17"):
                    break
            out.append((a + b) / 2)
        t, f_prev = t2, f_cur
    return out


zeros1000 = zeros_upto(mp.mpf(1005))
log(f"zeros <= 1005: {len(zeros1000)}")
mp.mp.dps = 50

n100 = sum(1 for g in zeros1000 if g < 100)
n1000 = sum(1 for g in zeros1000 if g < 1000)
log(f"N(100) = {n100}, N(1000) = {n1000}")


# ------------------------------------------------------------------ S1 pins
# S1(t) = sum_{gamma<=t} (t-gamma) - t - Theta(t)/pi, Theta(t) = int_0^t theta.
log("S1 pins")


def theta_int(t):
    return mp.quad(mp.siegeltheta, [0, min(10, t), t] if t > 10 else [0, t])


def s1_exact(t):
    t = mp.mpf(t)
    acc = mp.mpf(0)
    for g in zeros1000:
        if g <= t:
            acc += t - g
        else:
            break
    return acc - t - theta_int(t) / mp.pi


s1_pts = [(mp.mpf(t), s1_exact(t)) for t in (10, 50, 100, 333, 500, 1000)]

# --------------------------------------------------------------- integrals
log("integral pins")
g1 = zeros50[0]
int_z2_first = mp.quad(lambda u: mp.siegelz(u) ** 2, [0, 5, 10, g1])

log("J(1000) panel quadrature (slow)")
mp.mp.dps = 25


def j_integral(T, panel=mp.mpf(1)):
    total = mp.quad(lambda u: mp.siegelz(u) ** 2, [0, 5, 15, 30])
    t = mp.mpf(30)
    while t < T:
        t2 = min(t + panel, T)
        total += mp.quad(lambda u: mp.siegelz(u) ** 2, [t, t2])
        t = t2
    return total


j_1000 = j_integral(mp.mpf(1000))
mp.mp.dps = 50
log(f"J(1000) = {j_1000}")

# ---------------------------------------------------------------- Bernoulli
log("bernoulli table")
bern = [mp.bernoulli(2 * k) / mp.factorial(2 * k) for k in range(0, 31)]

# ------------------------------------------------------------------- output
log("writing output files")

hdr = """\
// Generated by tools/gen_oracle.py (mpmath, 50 digits). Do not edit by hand.
"""

with open("crates/core/const_table/bernoulli_over_factorial.rs", "w") as out:
    out.write(hdr)
    out.write("// BERN2K_OVER_FACT[k] = B_{2k} / (2k)!\n")
    out.write("[\n")
    for k, b in enumerate(bern):
        out.write(f"    {f(b)}, // k = {k}\n")
    out.write("]\n")

with open("crates/core/tests/common/oracle_data.rs", "w") as out:
    out.write(hdr)
    out.write("//! Frozen high-precision reference values for the test suite.\n")
    out.write("#![allow(dead_code, clippy::excessive_precision)]\n\n")
    for name, v in consts.items():
        out.write(f"pub const {name}: f64 = {f(v)};\n")
    out.write(f"\npub const THETA_MIN_T: f64 = {f(theta_min_t)};\n")
    out.write(f"pub const THETA_INT_0_TO_10: f64 = {f(theta_int_10)};\n")
    out.write(f"pub const THETA_INT_0_TO_30: f64 = {f(theta_int_30)};\n")
    out.write(f"pub const FIRST_ZERO: f64 = {f(zeros50[0])};\n")
    out.write(f"pub const N_100: usize = {n100};\n")
    out.write(f"pub const N_1000: usize = {n1000};\n")
    out.write(f"pub const INT_Z2_0_TO_FIRST_ZERO: f64 = {f(int_z2_first)};\n")
    out.write(f"pub const J_1000: f64 = {f(j_1000)};\n")

    out.write("\n/// (sigma, t, Re zeta, Im zeta)\n")
    out.write(f"pub const ZETA_POINTS: [(f64, f64, f64, f64); {len(zeta_pts)}] = [\n")
    for sigma, t, re, im in zeta_pts:
        out.write(f"    ({f(sigma)}, {f(t)}, {f(re)}, {f(im)}),\n")
    out.write("];\n")

    out.write("\n/// (t, theta(t))\n")
    out.write(f"pub const THETA_POINTS: [(f64, f64); {len(theta_pts)}] = [\n")
    for t, v in theta_pts:
        out.write(f"    ({f(t)}, {f(v)}),\n")
    out.write("];\n")

    out.write("\n/// (t, Z(t))\n")
    out.write(f"pub const Z_POINTS: [(f64, f64); {len(z_pts)}] = [\n")
    for t, v in z_pts:
        out.write(f"    ({f(t)}, {f(v)}),\n")
    out.write("];\n")

    out.write("\npub const ZEROS_FIRST_50: [f64; 50] = [\n")
    for g in zeros50:
        out.write(f"    {f(g)},\n")
    out.write("];\n")

    out.write("\n/// (t, S1(t))\n")
    out.write(f"pub const S1_POINTS: [(f64, f64); {len(s1_pts)}] = [\n")
    for t, v in s1_pts:
        out.write(f"    ({f(t)}, {f(v)}),\n")
    out.write("];\n")

log("done")
