#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
# Independent reference values for the C++ tests. Written against numpy/scipy directly, sharing
# no code with the library. Values printed here are frozen into tests/unit and tests/acceptance.
import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

lam, D, r, beta, alpha, d = 0.05, 0.025, 0.5, 1e-3, 3.0, 80.0
A = D * D
eps = D / r
s2 = 10 ** (-85 / 10)  # mW
M = 8


def offs(n):
    return np.arange(n) - (n - 1) / 2


def grid(n):
    return np.meshgrid(offs(n), offs(n), indexing="ij")


def avg_gain_sum(n, model="element_wise"):
    y, z = grid(n)
    q = y**2 + z**2
    if model == "element_wise":
        a = A / (4 * np.pi * r**2 * (1 + q * eps**2) ** 1.5)
    elif model == "free_space":
        a = A / (4 * np.pi * r**2 * (1 + q * eps**2))
    else:
        a = np.full_like(q, A / (4 * np.pi * r**2))
    return a.sum() * 2 * beta / d**alpha


def avg_gain_closed(n):
    return 2 * beta / (np.pi * d**alpha) * np.arctan(n * n * eps**2 / (2 * np.sqrt(4 + 2 * n * n * eps**2)))


def c_const(m):
    return 3 * (m - 1) * np.pi / (8 * m) - np.sin(2 * (m - 1) * np.pi / m) / 4 + np.sin(4 * (m - 1) * np.pi / m) / 32


def ser(p_dbm, a, b, m=M):
    pb = 10 ** (p_dbm / 10) / s2
    k = np.sin(np.pi / m) ** 2
    f = lambda t: 1 / ((1 + pb * a * k / np.sin(t) ** 2) * (1 + pb * b * k / np.sin(t) ** 2))
    return quad(f, 0, (m - 1) * np.pi / m, epsabs=0, epsrel=1e-13, limit=200)[0] / np.pi


def ser_bound(p_dbm, a, b, m=M):
    pb = 10 ** (p_dbm / 10) / s2
    return c_const(m) / (np.pi * np.sin(np.pi / m) ** 4 * a * b * pb**2)


def kernel(R, rho):
    k = np.sqrt(1 / rho**2 - 1)
    return 1 / np.sqrt(1 + k * np.cos(np.arctan(R))) - 1 / np.sqrt(1 + k)


def bounds(n, rho, xi=1.0):
    f = 2 * rho / (1 - rho**2) * xi**2
    return f * kernel(eps * n / 2, rho) ** 2, f * kernel(eps * np.sqrt(2) * n / 2, rho) ** 2


def pbf_exact(n, rt):
    o = offs(n)
    et = D / rt
    s = 0.0
    for yy in o:
        q = yy**2 + o**2
        a = A / (4 * np.pi * r**2 * (1 + q * eps**2) ** 1.5)
        b = A / (4 * np.pi * rt**2 * (1 + q * et**2) ** 1.5)
        s += np.sqrt(2 * a * b).sum()
    return s * s


def asym(rho, xi=1.0):
    return 2 * rho / (1 - rho**2) * xi**2 * (1 - 1 / np.sqrt(1 + np.sqrt(1 / rho**2 - 1))) ** 2


def grouped_gain(n, rt, group=10):
    y, z = grid(n)
    q = y**2 + z**2
    rn = r * np.sqrt(1 + q * eps**2)
    rtn = rt * np.sqrt(1 + q * (D / rt) ** 2)
    a = A / (4 * np.pi * r**2 * (1 + q * eps**2) ** 1.5)
    b = A / (4 * np.pi * rt**2 * (1 + q * (D / rt) ** 2) ** 1.5)
    g0 = np.sqrt(a) * np.exp(-2j * np.pi * np.mod(rn / lam, 1))
    g2 = np.sqrt(2 * b) * np.exp(-2j * np.pi * np.mod(rtn / lam, 1))
    prod = g0 * g2
    ph = np.angle(np.conj(prod))
    th = np.zeros_like(ph)
    for i in range(0, n, group):
        for j in range(0, n, group):
            ri, rj = min(i + group // 2, n - 1), min(j + group // 2, n - 1)
            th[i : i + group, j : j + group] = ph[ri, rj]
    return np.sum(prod * np.exp(1j * th))


def main():
    print("# reflected average gain: element sum, closed form")
    for n in [5, 15, 55, 105, 205, 305]:
        print(f"n={n} sum={avg_gain_sum(n):.15e} closed={avg_gain_closed(n):.15e}")
    for model in ["free_space", "far_field"]:
        print(f"n=105 {model}={avg_gain_sum(105, model):.15e}")
    lim = beta / d**alpha
    print(f"limit={lim:.15e} closed(5000)={avg_gain_closed(5000):.15e}")

    rh, rg = beta / d**alpha, avg_gain_closed(105)
    print(f"gap_direct_dB={10*np.log10(1+rh/rg):.6f} gap_reflected_dB={10*np.log10(1+rg/rh):.6f}")
    print("C(M):", {m: round(c_const(m), 12) for m in [2, 4, 8, 16]})

    rg_sum = avg_gain_sum(105)
    for p in [20, 25, 30]:
        print(f"P={p} ser={ser(p, rh, rg_sum):.12e} bound={ser_bound(p, rh, rg_sum):.12e}")
    t = ser_bound(30, rh, rg_sum)
    print(f"bound power offset at 30 dBm = {brentq(lambda x: ser(30 - x, rh, rg_sum) - t, -10, 10):.6f} dB")

    lo, up = bounds(100, 0.01)
    print(f"bounds(100, 0.01) lower={lo:.9e} upper={up:.9e} exact={pbf_exact(100, 50):.9e}")
    print(f"asym(0.01)={asym(0.01):.9e} ratio={0.02/asym(0.01):.9f} exact4000/asym={pbf_exact(4000, 50)/asym(0.01):.6f}")
    print(f"direct(50) exact={A/(4*np.pi*49.5**2):.12e} approx={A/(4*np.pi*50**2):.12e}")

    rts = np.geomspace(100, 400, 13)
    slope = lambda f: np.polyfit(np.log10(rts), np.log10([f(x) for x in rts]), 1)[0]
    print(f"slopes asym={slope(lambda x: asym(r/x)):.5f} approx={slope(lambda x: 2*r/x):.5f} "
          f"direct={slope(lambda x: A/(4*np.pi*(x-r)**2)):.5f} exact100={slope(lambda x: pbf_exact(100, x)):.5f}")

    g = grouped_gain(100, 50)
    h2 = np.sqrt(A / (4 * np.pi * 49.5**2)) * np.exp(-2j * np.pi * np.mod(49.5 / lam, 1))
    p2 = 10 ** 1.5
    rate = np.mean([np.log2(1 + p2 * abs(h2 * np.exp(-2j * np.pi * k / M) + g) ** 2 / s2) for k in range(M)])
    print(f"grouped |g|^2={abs(g)**2:.12e} passive_beamforming_rate={rate:.12f}")


if __name__ == "__main__":
    main()
