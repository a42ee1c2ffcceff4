"""Derives tests/data/quadratic_fields.csv by brute force.

Imaginary fields: h counts reduced forms (a, b, c) with |b| <= a <= c,
b >= 0 when |b| = a or a = c.
Real fields: the fundamental unit is the least (x + y sqrt(D))/2 > 1 with
x^2 - D y^2 = +-4, found by scanning y; R = log of it, and h comes from the
finite class number formula h = -(1/(2R)) sum_{a<D} (D/a) log sin(pi a / D).
"""

import math
import sys

from mpmath import mp, mpf, log, sin, pi, sqrt

mp.dps = 40


def kronecker(a, n):
    # (a/n) for n >= 1 via reciprocity, factoring out 2s.
    if n == 1:
        return 1
    result = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def imaginary_class_number(D):
    h = 0
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a or math.gcd(math.gcd(a, abs(b)), c) != 1:
                continue
            if b < 0 and (abs(b) == a or a == c):
                continue
            h += 1
        a += 1
    return h


def fundamental_unit(D):
    y = 1
    while True:
        for sign in (-4, 4):
            x2 = D * y * y + sign
            x = math.isqrt(x2) if x2 >= 0 else -1
            if x > 0 and x * x == x2:
                return x, y
        y += 1


def real_class_number(D, R):
    s = mpf(0)
    for a in range(1, D):
        chi = kronecker(D, a)
        if chi:
            s += chi * log(sin(pi * a / D))
    return int(mp.nint(-s / (2 * R)))


def main():
    discs = [-3, -4, -7, -8, -11, -15, -20, -23, -24, -39, -56, -84,
             5, 8, 12, 13, 40, 60, 65, 229]
    print("# disc,h,R,w (derived by tests/data/derive_fields.py)")
    for D in discs:
        if D < 0:
            h = imaginary_class_number(D)
            w = {-3: 6, -4: 4}.get(D, 2)
            print(f"{D},{h},1,{w}")
        else:
            x, y = fundamental_unit(D)
            R = log((x + y * sqrt(D)) / 2)
            h = real_class_number(D, R)
            print(f"{D},{h},{mp.nstr(R, 30)},2")


if __name__ == "__main__":
    sys.exit(main())
