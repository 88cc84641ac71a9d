"""Random inputs and brute-force oracles shared by the tests."""

from __future__ import annotations

import random
from fractions import Fraction
from math import isqrt

from nonruled.elliptic import SingularCurveError, WeierstrassCurve
from nonruled.exact_algebra import Poly
from nonruled.gauss import AffineGenerator, GaussValuation
from nonruled.valued_field import Value, ValuedField

FIELD_KINDS = ["padic:5", "padic:7", "tadic:Q", "tadic:Q:real", "tadic:F7", "composite:5"]


def uniformizer(vf: ValuedField):
    return vf.section(Value([1] + [0] * (vf.rank - 1)))


def random_unit(vf: ValuedField, rng: random.Random):
    """Random element of value zero."""
    kind = vf.desc.kind
    if kind == "padic":
        p = vf.desc.p
        while True:
            n, d = rng.randint(-40, 40), rng.randint(1, 40)
            if n % p and d % p:
                return Fraction(n, d)
    dom = vf.domain
    base = dom.base
    while True:
        num = [rng.randint(-6, 6) for _ in range(rng.randint(1, 3))]
        den = [rng.randint(-6, 6) for _ in range(rng.randint(1, 2))]
        if kind == "composite":
            p = vf.desc.p
            if num[0] % p == 0 or den[0] % p == 0:
                continue
        elif num[0] == 0 or den[0] == 0 or (base.characteristic and (num[0] % base.characteristic == 0
                                                                      or den[0] % base.characteristic == 0)):
            continue
        x = dom(Poly(num, base, "t")) / dom(Poly(den, base, "t"))
        if vf.valuate(x) == vf.zero_value:
            return x


def random_scalar(vf: ValuedField, rng: random.Random, spread: int = 4):
    """Random nonzero element with value spread over a small box."""
    x = random_unit(vf, rng)
    x = x * uniformizer(vf) ** rng.randint(-spread, spread)
    if vf.desc.kind == "composite":
        x = x * Fraction(vf.desc.p) ** rng.randint(-2, 2)
    return x


def random_curve(vf: ValuedField, rng: random.Random) -> WeierstrassCurve:
    """Mix of raw random, good-reduction, bad-reduction and a=0 / b=0 curves."""
    while True:
        mode = rng.choice(["raw", "raw", "good", "bad", "bad", "a0", "b0"])
        pi = uniformizer(vf)
        if mode == "raw":
            a, b = random_scalar(vf, rng), random_scalar(vf, rng)
        elif mode == "a0":
            a, b = 0, random_scalar(vf, rng)
        elif mode == "b0":
            a, b = random_scalar(vf, rng), 0
        else:
            if mode == "good":
                al, be = random_unit(vf, rng), random_unit(vf, rng)
            else:
                lam, mu = random_unit(vf, rng), random_unit(vf, rng)
                al = -3 * lam ** 2
                be = 2 * lam ** 3 + mu * pi ** rng.randint(1, 4)
            e = random_scalar(vf, rng, 2)
            a, b = e ** 4 * al, e ** 6 * be
        try:
            return WeierstrassCurve(vf, a, b)
        except SingularCurveError:
            continue


def sample_generators(curve: WeierstrassCurve):
    """Gauss valuations probed by the uniqueness spot check."""
    vf = curve.field
    E = vf.domain
    gens = [AffineGenerator(E.one, E.zero)]
    for k in range(-2, 3):
        gens.append(AffineGenerator(vf.section(Value([k] + [0] * (vf.rank - 1))), E.zero))
        if vf.rank == 2:
            gens.append(AffineGenerator(vf.section(Value([0, k])), E.zero))
    v_delta = vf.valuate(curve.discriminant)
    if curve.a and curve.b and vf.in_index_subgroup(v_delta, 2):
        c = vf.section(-(v_delta / 2))
        gens.append(AffineGenerator(6 * c * curve.a, 9 * c * curve.b))
    return [GaussValuation(vf, g) for g in gens]


# -- brute-force oracles -----------------------------------------------------


def primitive_solution_mod(a: int, b: int, p: int, k: int) -> bool:
    """Some (x, y, z) not all divisible by p with z^2 = a x^2 + b y^2 mod p^k."""
    m = p ** k
    sq = {}
    for z in range(m):
        sq.setdefault(z * z % m, []).append(z)
    for x in range(m):
        for y in range(m):
            for z in sq.get((a * x * x + b * y * y) % m, ()):
                if x % p or y % p or z % p:
                    return True
    return False


def search_point(A: int, B: int, bound: int):
    """Integral (x, y, z) != 0 with z^2 = A x^2 + B y^2 and |x|, |y| <= bound."""
    for x in range(bound + 1):
        for y in range(-bound, bound + 1):
            if x == 0 and y == 0:
                continue
            r = A * x * x + B * y * y
            if r >= 0 and isqrt(r) ** 2 == r:
                return x, y, isqrt(r)
    return None


def primes_of(n: int):
    n = abs(n)
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out
