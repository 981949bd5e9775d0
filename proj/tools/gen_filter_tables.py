#!/usr/bin/env python3
"""Generate include/gensample/filter_tables.hpp.

Interior filters are the extremal-phase Daubechies filters with p vanishing
moments, obtained by spectral factorization. Edge filters follow the
Cohen-Daubechies-Vial construction: the truncated polynomial-reproducing
combinations of interior translates near each endpoint, orthonormalized by
Cholesky factorization of their Gram matrix (computed from the edge
refinement relation).

Everything is evaluated with mpmath at 60 digits and printed with 21
significant digits.

Conventions (matching wavelets.hpp):
  * interior scaling function is centered on [1-p, p]; h[j] is the
    coefficient of index k = j + 1 - p in phi(x) = sqrt2 sum_k h_k phi(2x-k).
  * left edge on [0, inf):
      phiL(x) = sqrt2 (HL phiL(2x) + sum_m hL[:, m-p] phi(2x - m)), m = p..3p-2
  * right edge on (-inf, 0]:
      phiR(x) = sqrt2 (HR phiR(2x) + sum_m hR[:, m+3p-1] phi(2x - m)),
      m = 1-3p..-p-1
"""

import sys
import mpmath as mp

mp.mp.dps = 60
PMAX = 7


def daubechies(p):
    if p == 1:
        s = 1 / mp.sqrt(2)
        return [s, s]
    # P(y) = sum_k binom(p-1+k, k) y^k with y = sin^2(w/2) = (2 - z - 1/z) / 4.
    # Multiply by z^(p-1) to get a polynomial in z of degree 2(p-1).
    poly = [mp.mpf(0)] * (2 * p - 1)  # coefficients of z^0..z^(2p-2)
    for k in range(p):
        c = mp.binomial(p - 1 + k, k)
        # y^k z^(p-1) = ((-1/4)(z^2 - 2z + 1)/z)^k z^(p-1)
        base = [mp.mpf(1)]
        for _ in range(k):
            nxt = [mp.mpf(0)] * (len(base) + 2)
            for i, b in enumerate(base):
                nxt[i] += -b / 4
                nxt[i + 1] += 2 * b / 4
                nxt[i + 2] += -b / 4
            base = nxt
        shift = p - 1 - k
        for i, b in enumerate(base):
            poly[i + shift] += c * b
    roots = mp.polyroots(list(reversed(poly)), maxsteps=400, extraprec=400)
    inside = [r for r in roots if abs(r) < 1]
    assert len(inside) == p - 1, (p, roots)
    # H(z) ~ (1 + z)^p prod (z - r), coefficients in ascending powers
    coeffs = [mp.mpc(1)]
    for _ in range(p):
        coeffs = [a + b for a, b in zip(coeffs + [0], [0] + coeffs)]
    for r in inside:
        nxt = [mp.mpc(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += -r * c
            nxt[i + 1] += c
        coeffs = nxt
    h = [mp.re(c) for c in coeffs]
    s = sum(h)
    h = [x * mp.sqrt(2) / s for x in h]
    # extremal phase with energy at the start of the filter
    if abs(h[0]) < abs(h[-1]):
        h = list(reversed(h))
    return h


def moments(h, p):
    # h indexed k = 1-p .. p
    ks = list(range(1 - p, p + 1))
    M = [mp.mpf(1)]
    for j in range(1, p):
        acc = mp.mpf(0)
        for i in range(j):
            s = sum(hk * mp.mpf(k) ** (j - i) for hk, k in zip(h, ks))
            acc += mp.binomial(j, i) * M[i] * s
        M.append(acc * mp.mpf(2) ** (-j) / mp.sqrt(2) / (1 - mp.mpf(2) ** (-j)))
    return M


def hval(h, p, k):
    j = k + p - 1
    return h[j] if 0 <= j < 2 * p else mp.mpf(0)


def edge(h, p, side):
    M = moments(h, p)

    def P(a, n):
        return sum(mp.binomial(a, i) * mp.mpf(n) ** (a - i) * M[i] for i in range(a + 1))

    if side == "left":
        ns = range(1 - p, p)
        ms = range(p, 3 * p - 1)
    else:
        ns = range(-p, p - 1)
        ms = range(1 - 3 * p, -p)
    d = mp.matrix(p, len(ms))
    for a in range(p):
        for c, m in enumerate(ms):
            d[a, c] = mp.sqrt(2) * sum(P(a, n) * hval(h, p, m - 2 * n) for n in ns)
    G = mp.matrix(p, p)
    for a in range(p):
        for b in range(p):
            s = sum(d[a, c] * d[b, c] for c in range(len(ms)))
            G[a, b] = s / 2 / (1 - mp.mpf(2) ** (-a - b - 1))
    L = mp.cholesky(G)
    Li = L ** -1
    D = mp.diag([mp.mpf(2) ** (-a) for a in range(p)])
    H = Li * D * L / mp.sqrt(2)
    hl = Li * d / mp.sqrt(2)
    # orthonormality check
    I = H * H.T + hl * hl.T
    err = max(abs(I[i, j] - (1 if i == j else 0)) for i in range(p) for j in range(p))
    assert err < mp.mpf(10) ** -40, err
    return H, hl


def fmt(x):
    return mp.nstr(x, 21, min_fixed=-1, max_fixed=1, strip_zeros=False)


def main(out):
    lines = []
    w = lines.append
    w("// Generated by tools/gen_filter_tables.py. Do not edit.")
    w("#pragma once")
    w("")
    w("#include <array>")
    w("")
    w("namespace gensample::tables {")
    w("")
    w(f"inline constexpr int kMaxVanishingMoments = {PMAX};")
    w("")
    w("// Extremal-phase Daubechies low-pass filters, sum h = sqrt(2).")
    for p in range(1, PMAX + 1):
        h = daubechies(p)
        w(f"inline constexpr std::array<double, {2 * p}> kDaub{p} = {{")
        for x in h:
            w(f"    {fmt(x)},")
        w("};")
    w("")
    for p in range(2, PMAX + 1):
        h = daubechies(p)
        for side, tag in (("left", "Left"), ("right", "Right")):
            H, hl = edge(h, p, side)
            w(f"// {side} edge, p = {p}: {p}x{p} edge block, then {p}x{2 * p - 1} interior tail")
            w(f"inline constexpr std::array<double, {p * p}> k{tag}Edge{p} = {{")
            for i in range(p):
                w("    " + " ".join(fmt(H[i, j]) + "," for j in range(p)))
            w("};")
            w(f"inline constexpr std::array<double, {p * (2 * p - 1)}> k{tag}Tail{p} = {{")
            for i in range(p):
                w("    " + " ".join(fmt(hl[i, j]) + "," for j in range(2 * p - 1)))
            w("};")
    w("")
    w("}  // namespace gensample::tables")
    w("")
    with open(out, "w") as f:
        f.write("\n".join(lines))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/gensample/filter_tables.hpp")
