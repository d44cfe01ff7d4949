"""Shared independent oracles for the test suite.

These deliberately avoid the library's own code paths: inverses come from
a brute-force pair scan, orbits from the closed six-element formula, and
Moebius maps from Fraction arithmetic on the projective line.
"""

from fractions import Fraction

INF = "inf"


def primes_upto(n):
    sieve = [True] * (n + 1)
    sieve[0:2] = [False, False]
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = [False] * len(sieve[i * i :: i])
    return [i for i, b in enumerate(sieve) if b]


def sweep_primes(n=199):
    return [p for p in primes_upto(n) if p >= 5]


def brute_inverse_table(p):
    """a -> a^(-1) found by scanning all products, no pow(-1) involved."""
    table = {}
    for a in range(1, p):
        for b in range(1, p):
            if a * b % p == 1:
                table[a] = b
                break
    return table


def orbit_formula(alpha, p):
    """The six-element orbit formula, evaluated directly."""
    inv = brute_inverse_table(p)
    return {
        alpha % p,
        inv[alpha % p],
        (-(1 + alpha)) % p,
        (-inv[(1 + alpha) % p]) % p,
        (-inv[alpha % p] * (1 + alpha)) % p,
        (-alpha * inv[(1 + alpha) % p]) % p,
    }


def moebius_eval(label_name, x):
    """Evaluate a Moebius map at a Fraction or the point at infinity."""
    if label_name == "ID":
        return x
    if label_name == "INV":
        if x == INF:
            return Fraction(0)
        if x == 0:
            return INF
        return 1 / x
    if label_name == "ONE_MINUS":
        return INF if x == INF else 1 - x
    if label_name == "OVER":
        if x == INF:
            return Fraction(1)
        if x == 1:
            return INF
        return x / (x - 1)
    if label_name == "CYC":
        if x == INF:
            return Fraction(0)
        if x == 1:
            return INF
        return 1 / (1 - x)
    if label_name == "CYC2":
        if x == INF:
            return Fraction(1)
        if x == 0:
            return INF
        return (x - 1) / x
    raise ValueError(label_name)
