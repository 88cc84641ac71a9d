"""Rational points on conics C_{A,B}: Y^2 = A X^2 + B over Q, F_p, or R.

Over Q the test is local: Hilbert symbols at the real place, at 2 and at the
odd primes dividing the square-class representatives.  Factorization is by
trial division, so inputs are expected to be of modest height.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact_algebra import GFElem

REAL = "real"


class DegenerateConicError(ValueError):
    pass


def factor_int(n: int) -> dict[int, int]:
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_rep(x) -> int:
    """Squarefree integer in the square class of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise DegenerateConicError("zero has no square class")
    n = x.numerator * x.denominator
    rep = -1 if n < 0 else 1
    for q, e in factor_int(n).items():
        if e % 2:
            rep *= q
    return rep


def _split(x: Fraction, p: int):
    """x = p^k * u with u a p-adic unit."""
    k = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        k += 1
    while den % p == 0:
        den //= p
        k -= 1
    return k, num, den


def legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@lru_cache(maxsize=None)
def _local_solvable_mod(a: int, b: int, modulus: int) -> bool:
    """Primitive solution of z^2 = a x^2 + b y^2 modulo `modulus` (a prime power)."""
    p = factor_int(modulus).popitem()[0]
    squares: dict[int, list[int]] = {}
    for z in range(modulus):
        squares.setdefault(z * z % modulus, []).append(z)
    for x in range(modulus):
        ax = a * x * x
        for y in range(modulus):
            zs = squares.get((ax + b * y * y) % modulus)
            if not zs:
                continue
            if x % p or y % p:
                return True
            if any(z % p for z in zs):
                return True
    return False


# Q_2^x / squares is represented by pairs (parity of v_2, unit mod 8).
_UNIT_CLASSES = (1, 3, 5, 7)


@lru_cache(maxsize=None)
def _hilbert2_table() -> dict:
    """(a, b)_2 on square-class representatives, by exhaustive search mod 32."""
    reps = [(k, u) for k in (0, 1) for u in _UNIT_CLASSES]
    table = {}
    for ka, ua in reps:
        for kb, ub in reps:
            a, b = 2 ** ka * ua, 2 ** kb * ub
            table[(ka, ua), (kb, ub)] = 1 if _local_solvable_mod(a, b, 32) else -1
    return table


def _hilbert2_formula(a: Fraction, b: Fraction) -> int:
    ka, na, da = _split(a, 2)
    kb, nb, db = _split(b, 2)
    u = na * da % 8
    v = nb * db % 8
    eps = lambda w: ((w - 1) // 2) % 2
    omega = lambda w: ((w * w - 1) // 8) % 2
    e = eps(u) * eps(v) + ka * omega(v) + kb * omega(u)
    return -1 if e % 2 else 1


def hilbert_symbol(a, b, place) -> int:
    """(a, b)_place for nonzero rationals; place is REAL or a prime."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise DegenerateConicError("Hilbert symbol of zero")
    if place == REAL:
        return -1 if a < 0 and b < 0 else 1
    p = int(place)
    if p == 2:
        ka, na, da = _split(a, 2)
        kb, nb, db = _split(b, 2)
        key = ((ka % 2, na * da % 8), (kb % 2, nb * db % 8))
        return _hilbert2_table()[key]
    ka, na, da = _split(a, p)
    kb, nb, db = _split(b, p)
    s = -1 if (ka * kb * ((p - 1) // 2)) % 2 else 1
    if kb % 2:
        s *= legendre(na * da, p)
    if ka % 2:
        s *= legendre(nb * db, p)
    return s


@dataclass(frozen=True)
class ConicClass:
    """Normalized C_{A,B}: squarefree integers over Q, {1, nonresidue} over F_p."""
    A: object
    B: object
    p: int | None = None  # None means the residue field is Q (or R under real-signs)
    semantics: str = "exact"

    def to_json(self):
        return [int(self.A), int(self.B)]


def _nonresidue_rep(p: int) -> int:
    """Largest nonresidue in [1, p-1]; this is -1 when p = 3 mod 4."""
    n = p - 1
    while legendre(n, p) != -1:
        n -= 1
    return n


def conic_normalize(A, B, semantics: str = "exact") -> ConicClass:
    if not A or not B:
        raise DegenerateConicError("degenerate conic")
    if isinstance(A, GFElem) or isinstance(B, GFElem):
        p = A.p if isinstance(A, GFElem) else B.p
        A, B = GFElem(int(A) if isinstance(A, GFElem) else A, p), GFElem(int(B) if isinstance(B, GFElem) else B, p)
        nr = _nonresidue_rep(p)
        rep = lambda x: GFElem(1 if x.is_square() else nr, p)
        return ConicClass(rep(A), rep(B), p, semantics)
    return ConicClass(squarefree_rep(A), squarefree_rep(B), None, semantics)


def conic_places(c: ConicClass) -> list:
    primes = set(factor_int(int(c.A))) | set(factor_int(int(c.B)))
    primes.discard(2)
    return [REAL, 2] + sorted(primes)


def conic_has_point(c: ConicClass) -> bool:
    if not c.A or not c.B:
        raise DegenerateConicError("degenerate conic")
    if c.p is not None:
        # quaternion algebras over finite fields split
        return True
    if c.semantics == "real-signs":
        return c.A > 0 or c.B > 0
    return all(hilbert_symbol(c.A, c.B, place) == 1 for place in conic_places(c))
