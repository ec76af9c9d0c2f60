#!/usr/bin/env python3
"""Regenerate the vendored b-files from classical formulas.

Each sequence is produced by a route unrelated to the package's own
computation (exponential generating functions, lattice-path counting,
inclusion-exclusion), so the cross-checks in the test suite compare two
independent derivations.
"""

import os
from fractions import Fraction
from math import comb, factorial

N_MAX = 24
OUT = os.path.join(os.path.dirname(__file__), "..", "src", "arcact", "data", "bfiles")


def series_exp(a, terms):
    """exp of a power series with zero constant term, coefficient list."""
    assert a[0] == 0
    b = [Fraction(1)] + [Fraction(0)] * (terms - 1)
    for n in range(1, terms):
        b[n] = sum(Fraction(k) * a[k] * b[n - k] for k in range(1, n + 1)) / n
    return b


def egf_to_ints(coeffs):
    out = []
    for n, c in enumerate(coeffs):
        value = c * factorial(n)
        assert value.denominator == 1
        out.append(int(value))
    return out


def dowling(terms):
    # EGF exp(x + (exp(2x) - 1)/2)
    a = [Fraction(0)] * terms
    for k in range(1, terms):
        a[k] = Fraction(2**k, 2 * factorial(k))
    a[1] += 1
    return egf_to_ints(series_exp(a, terms))


def bell_two(terms):
    # EGF exp((exp(2x) - 1)/2)
    a = [Fraction(0)] * terms
    for k in range(1, terms):
        a[k] = Fraction(2**k, 2 * factorial(k))
    return egf_to_ints(series_exp(a, terms))


def central_trinomial(terms):
    out = []
    for n in range(terms):
        poly = [1]
        for _ in range(n):
            nxt = [0] * (len(poly) + 2)
            for i, c in enumerate(poly):
                nxt[i] += c
                nxt[i + 1] += c
                nxt[i + 2] += c
            poly = nxt
        out.append(poly[n] if n < len(poly) else 0)
    return out


def motzkin_prefixes(terms):
    # a(0) = 1; a(n) = walks with steps -1, 0, +1 of length n-1 staying >= 0
    out = [1]
    for n in range(1, terms):
        length = n - 1
        heights = [1] + [0] * length
        for _ in range(length):
            nxt = [0] * len(heights)
            for h, c in enumerate(heights):
                if not c:
                    continue
                nxt[h] += c
                if h + 1 < len(nxt):
                    nxt[h + 1] += c
                if h > 0:
                    nxt[h - 1] += c
            heights = nxt
        out.append(sum(heights))
    return out


def no_singleton_partitions(terms):
    out = [1]
    for n in range(1, terms):
        out.append(
            sum(comb(n - 1, k - 1) * out[n - k] for k in range(2, n + 1))
        )
    return out


def assoc_stirling_rows(n_max):
    # T(n, k) via inclusion-exclusion over forbidden singletons
    def stirling2(n, k):
        if n == 0:
            return 1 if k == 0 else 0
        if k <= 0 or k > n:
            return 0
        return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)

    rows = []
    for n in range(2, n_max + 1):
        row = []
        for k in range(1, n // 2 + 1):
            row.append(
                sum(
                    (-1) ** j * comb(n, j) * stirling2(n - j, k - j)
                    for j in range(0, k + 1)
                )
            )
        rows.append((n, row))
    return rows


def write_bfile(name, pairs):
    path = os.path.join(OUT, name)
    with open(path, "w", encoding="ascii") as handle:
        for index, value in pairs:
            handle.write(f"{index} {value}\n")
    print("wrote", path)


def main():
    write_bfile("b007405.txt", enumerate(dowling(N_MAX)))
    write_bfile("b004211.txt", enumerate(bell_two(N_MAX)))
    write_bfile("b002426.txt", enumerate(central_trinomial(N_MAX)))
    write_bfile("b005773.txt", enumerate(motzkin_prefixes(N_MAX)))
    write_bfile("b000296.txt", enumerate(no_singleton_partitions(N_MAX)))
    linear = []
    index = 1
    for n, row in assoc_stirling_rows(16):
        for value in row:
            linear.append((index, value))
            index += 1
    write_bfile("b008299.txt", linear)


if __name__ == "__main__":
    import sys

    sys.setrecursionlimit(100000)
    main()
