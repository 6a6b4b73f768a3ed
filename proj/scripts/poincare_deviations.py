#!/usr/bin/env python3
"""Deviation expansion of a Poincare series.

Factors a power series P(t) with P(0) = 1 as

    P(t) = prod_{i odd} (1 + t^i)^{e_i} * prod_{i even} (1 - t^i)^{-e_i}

and reports the exponents e_1, e_2, ... .  For the embedding-dimension-2
local ring with square-zero maximal ideal the series is 1/(1 - 2t), and the
exponents give the expected tangent-space dimensions (T^1, T^2, ...).

Usage: poincare_deviations.py [edim] [window]
"""

import sys
from fractions import Fraction


def series_inverse(a, n):
    """Coefficients of 1/A(t) mod t^n, A(0) != 0."""
    inv = [Fraction(0)] * n
    inv[0] = 1 / Fraction(a[0])
    for k in range(1, n):
        s = sum(a[j] * inv[k - j] for j in range(1, k + 1) if j < len(a))
        inv[k] = -s / Fraction(a[0])
    return inv


def series_mul(a, b, n):
    out = [Fraction(0)] * n
    for i, ai in enumerate(a[:n]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: n - i]):
            out[i + j] += ai * bj
    return out


def binomial_series(i, e, sign, n):
    """(1 + sign*t^i)^e mod t^n for integer e >= 0."""
    out = [Fraction(0)] * n
    out[0] = Fraction(1)
    base = [Fraction(0)] * n
    base[0] = Fraction(1)
    if i < n:
        base[i] = Fraction(sign)
    for _ in range(e):
        out = series_mul(out, base, n)
    return out


def deviations(series, window):
    n = window + 1
    rem = series[:n] + [Fraction(0)] * (n - len(series))
    devs = []
    for i in range(1, window + 1):
        e = rem[i]
        assert e.denominator == 1 and e >= 0, f"non-integral deviation at {i}: {e}"
        e = int(e)
        devs.append(e)
        if i % 2 == 1:
            # divide by (1 + t^i)^e
            rem = series_mul(rem, series_inverse(binomial_series(i, e, 1, n), n), n)
        else:
            # multiply by (1 - t^i)^e
            rem = series_mul(rem, binomial_series(i, e, -1, n), n)
    return devs


def main():
    edim = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    window = int(sys.argv[2]) if len(sys.argv) > 2 else 4
    n = window + 1
    # P(t) = 1/(1 - edim*t): Poincare series of k[x_1..x_e]/(maximal ideal)^2.
    one_minus = [Fraction(1)] + [Fraction(0)] * (n - 1)
    if n > 1:
        one_minus[1] = Fraction(-edim)
    series = series_inverse(one_minus, n)
    devs = deviations(series, window)
    print(f"Poincare series 1/(1 - {edim}t), window {window}")
    print("deviations (= expected tangent dims):", devs)


if __name__ == "__main__":
    main()
