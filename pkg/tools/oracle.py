"""Independent reference values for the test suite.

Computes with sympy in free symbols q, z (no relation imposed), using only the
generator table of sigma, the matrix coproduct and the bicharacter rules
    sigma(hh', g) = sigma(h, g_1) sigma(h', g_2),  sigma(g, hh') = sigma(g_2, h) sigma(g_1, h').
Nothing here imports qdouble.  Run it and paste the printed literals into
tests/test_oracles.py.
"""

import itertools
import json

import sympy as sp

q, z = sp.symbols("q z")


def gen_sigma(a, b):
    (i, j), (m, n) = a, b
    if i == j and m == n:
        return z * q if i == m else z
    if (m, n) == (j, i) and i < j:
        return z * (q - 1 / q)
    return 0


def coproduct(word, N):
    """Delta of x_{i1 j1} ... x_{ik jk} as a list of (left word, right word)."""
    out = []
    for ks in itertools.product(range(1, N + 1), repeat=len(word)):
        out.append((tuple((i, k) for (i, _), k in zip(word, ks)), tuple((k, j) for (_, j), k in zip(word, ks))))
    return out


def counit(word):
    return int(all(i == j for i, j in word))


def sigma(a, b, N):
    if not b:
        return counit(a)
    if not a:
        return counit(b)
    if len(a) == 1 and len(b) == 1:
        return gen_sigma(a[0], b[0])
    if len(a) > 1:
        # split the left word
        return sp.expand(sum(sigma(a[:1], b1, N) * sigma(a[1:], b2, N) for b1, b2 in coproduct(b, N)))
    return sp.expand(sum(sigma(a2, b[:1], N) * sigma(a1, b[1:], N) for a1, a2 in coproduct(a, N)))


def length(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def detq(N):
    return {tuple((i + 1, p[i] + 1) for i in range(N)): (-q) ** (-length(p)) for p in itertools.permutations(range(N))}


def sigma_lin(A, b, N):
    return sp.simplify(sum(c * sigma(w, b, N) for w, c in A.items()))


def sigma_rlin(a, B, N):
    return sp.simplify(sum(c * sigma(a, w, N) for w, c in B.items()))


def frt(N):
    """c(e_i (x) e_j) as an N^2 x N^2 matrix, column (i, j), row (k, l)."""
    M = sp.zeros(N * N, N * N)
    for i in range(N):
        for j in range(N):
            col = i * N + j
            M[j * N + i, col] += q if i == j else 1
            if i > j:
                M[col, col] += q - 1 / q
    return M


def braid_checks(N):
    c = frt(N)
    I = sp.eye(N)
    c12, c23 = sp.kronecker_product(c, I), sp.kronecker_product(I, c)
    braid = sp.simplify(c12 * c23 * c12 - c23 * c12 * c23) == sp.zeros(N ** 3, N ** 3)
    P = sp.zeros(N * N, N * N)
    for i in range(N):
        for j in range(N):
            P[j * N + i, i * N + j] = 1
    R = P * c
    R12 = sp.kronecker_product(R, I)
    R23 = sp.kronecker_product(I, R)
    P23 = sp.kronecker_product(I, P)
    R13 = P23 * R12 * P23
    qybe_flip = sp.simplify(R12 * R13 * R23 - R23 * R13 * R12) == sp.zeros(N ** 3, N ** 3)
    c13 = P23 * c12 * P23
    qybe_literal = sp.simplify(c12 * c13 * c23 - c23 * c13 * c12) == sp.zeros(N ** 3, N ** 3)
    hecke = sp.simplify((c - q * sp.eye(N * N)) * (c + sp.eye(N * N) / q)) == sp.zeros(N * N, N * N)
    return {"braid": braid, "qybe_flip": qybe_flip, "qybe_literal": qybe_literal, "hecke": hecke}


def fmt(e):
    return str(sp.simplify(e)).replace("**", "^")


def main():
    out = {}
    gens2 = [(i, j) for i in (1, 2) for j in (1, 2)]
    out["sigma_deg2_deg1_N2"] = {
        f"{a}|{b}": fmt(sigma(a, (b,), 2)) for a in itertools.product(gens2, repeat=2) for b in gens2}
    out["sigma_deg1_deg2_N2"] = {
        f"{a}|{b}": fmt(sigma((a,), b, 2)) for a in gens2 for b in itertools.product(gens2, repeat=2)}
    for N in (2, 3):
        D = detq(N)
        gens = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1)]
        out[f"det_N{N}"] = {str(w): fmt(c) for w, c in D.items()}
        out[f"sigma_det_left_N{N}"] = {str(g): fmt(sigma_lin(D, (g,), N)) for g in gens}
        out[f"sigma_det_right_N{N}"] = {str(g): fmt(sigma_rlin((g,), D, N)) for g in gens}
        out[f"braid_N{N}"] = braid_checks(N)
    # E_1 = Khat_2^-1 l_21 on x11 x12: Khat_2^-1 is the character x_mn -> z^-1 q^-delta_2m delta_mn
    def khat2_inv(word):
        v = 1
        for m, n in word:
            v *= 0 if m != n else 1 / (z * q ** (1 if m == 2 else 0))
        return v
    h = ((1, 1), (1, 2))
    out["E1_x11x12"] = fmt(sum(khat2_inv(a) * sigma(b, ((2, 1),), 2) for a, b in coproduct(h, 2)))
    print(json.dumps(out, indent=1, default=str))


if __name__ == "__main__":
    main()
