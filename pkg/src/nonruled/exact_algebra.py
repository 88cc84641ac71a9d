"""Exact arithmetic: rationals, prime fields, dense polynomials, rational functions.

Rationals are :class:`fractions.Fraction`.  Every coefficient domain is a
small object exposing ``zero``, ``one``, ``characteristic`` and a coercing
``__call__``; polynomials and rational functions carry their domain so that
mixing domains is caught early.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


class DomainError(TypeError):
    """Operands live over different coefficient domains."""


class PoleError(ZeroDivisionError):
    """A rational function was evaluated at a zero of its denominator."""


class CharacteristicError(ValueError):
    """The characteristic is too small for a derivative-based algorithm."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# Base domains


class RationalField:
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, (Poly, RatFunc, GFElem)):
            raise DomainError(f"cannot coerce {x!r} into QQ")
        return Fraction(x)

    def contains(self, x) -> bool:
        return isinstance(x, (Fraction, int))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class GFElem:
    """Element of the prime field F_p, immutable."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, GFElem):
            if other.p != self.p:
                raise DomainError(f"F_{self.p} vs F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError(f"{other} has no image in F_{self.p}")
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElem(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElem(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElem(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElem(self.value * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> GFElem:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return GFElem(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * GFElem(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElem(o, self.p) * self.inverse()

    def __neg__(self):
        return GFElem(-self.value, self.p)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return GFElem(pow(self.value, n, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, GFElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def is_square(self) -> bool:
        """Euler's criterion; zero counts as a square."""
        return self.value == 0 or pow(self.value, (self.p - 1) // 2, self.p) == 1

    def __repr__(self):
        return f"GFElem({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class PrimeField:
    """F_p for a prime p > 3."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p in (2, 3):
            raise ValueError("characteristic 2 and 3 are not supported")
        self.p = p
        self.characteristic = p
        self.zero = GFElem(0, p)
        self.one = GFElem(1, p)

    def __call__(self, x) -> GFElem:
        if isinstance(x, GFElem):
            if x.p != self.p:
                raise DomainError(f"F_{x.p} element in F_{self.p}")
            return x
        if isinstance(x, int):
            return GFElem(x, self.p)
        if isinstance(x, Fraction):
            return GFElem(x.numerator, self.p) / x.denominator
        raise DomainError(f"cannot coerce {x!r} into F_{self.p}")

    def contains(self, x) -> bool:
        return isinstance(x, int) or (isinstance(x, GFElem) and x.p == self.p)

    def elements(self):
        return [GFElem(i, self.p) for i in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


# ---------------------------------------------------------------------------
# Polynomials


def _strip(cs: list) -> list:
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    del cs[n:]
    return cs


class Poly:
    """Dense univariate polynomial, coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree ``-1``
    (used as the minus-infinity sentinel).
    """

    __slots__ = ("coeffs", "domain", "var")

    def __init__(self, coeffs, domain, var: str = "x"):
        self.coeffs = tuple(_strip([domain(c) for c in coeffs]))
        self.domain = domain
        self.var = var

    @classmethod
    def _raw(cls, coeffs: list, domain, var: str) -> Poly:
        p = object.__new__(cls)
        p.coeffs = tuple(_strip(coeffs))
        p.domain = domain
        p.var = var
        return p

    @classmethod
    def gen(cls, domain, var: str = "x") -> Poly:
        return cls._raw([domain.zero, domain.one], domain, var)

    @classmethod
    def constant(cls, c, domain, var: str = "x") -> Poly:
        return cls._raw([domain(c)], domain, var)

    # -- basic accessors
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.domain.zero

    def _check(self, other: Poly):
        if other.domain != self.domain:
            raise DomainError(f"{self.domain!r} vs {other.domain!r}")
        if other.var != self.var:
            raise DomainError(f"variable {self.var} vs {other.var}")

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            self._check(other)
            return other
        try:
            return Poly._raw([self.domain(other)], self.domain, self.var)
        except (DomainError, TypeError):
            return None

    # -- arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] = res[i] + c
        return Poly._raw(res, self.domain, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs], self.domain, self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = self.domain(other)
            except (DomainError, TypeError):
                return NotImplemented
            return self.scale(c)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw([], self.domain, self.var)
        if self.domain is QQ and len(a) > 1 and len(b) > 1:
            return Poly._raw(_qq_mul(a, b), QQ, self.var)
        if isinstance(self.domain, PrimeField):
            return Poly._raw(_gf_mul(a, b, self.domain.p), self.domain, self.var)
        res = [self.domain.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                res[i + j] = res[i + j] + x * y
        return Poly._raw(res, self.domain, self.var)

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        if not c:
            return Poly._raw([], self.domain, self.var)
        return Poly._raw([c * x for x in self.coeffs], self.domain, self.var)

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly._raw([self.domain.one], self.domain, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> Poly:
        """Multiply by var**k (k >= 0)."""
        if not self.coeffs:
            return self
        return Poly._raw([self.domain.zero] * k + list(self.coeffs), self.domain, self.var)

    def __divmod__(self, other: Poly):
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        inv = self.domain.one / other.lc
        if len(r) - 1 < db:
            return Poly._raw([], self.domain, self.var), self
        if self.domain is QQ:
            q, r = _qq_divmod(self.coeffs, other.coeffs)
            return Poly._raw(q, QQ, self.var), Poly._raw(r, QQ, self.var)
        if isinstance(self.domain, PrimeField):
            q, r = _gf_divmod(self.coeffs, other.coeffs, self.domain.p)
            return Poly._raw(q, self.domain, self.var), Poly._raw(r, self.domain, self.var)
        q = [self.domain.zero] * (len(r) - db)
        b = other.coeffs
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] * inv
            q[k] = c
            if c:
                for j in range(db + 1):
                    r[k + j] = r[k + j] - c * b[j]
        return Poly._raw(q, self.domain, self.var), Poly._raw(r[:db], self.domain, self.var)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        lc = self.lc
        if lc == self.domain.one:
            return self
        inv = self.domain.one / lc
        return Poly._raw([c * inv for c in self.coeffs], self.domain, self.var)

    def derivative(self) -> Poly:
        return Poly._raw([c * i for i, c in enumerate(self.coeffs)][1:], self.domain, self.var)

    def __call__(self, x):
        """Horner evaluation; x may be a scalar or another polynomial."""
        if not self.coeffs:
            return self.domain.zero if not isinstance(x, Poly) else Poly._raw([], x.domain, x.var)
        acc = self.coeffs[-1]
        if isinstance(x, Poly):
            acc = Poly._raw([acc], x.domain, x.var)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def map_coeffs(self, fn, domain, var: str | None = None) -> Poly:
        return Poly._raw([fn(c) for c in self.coeffs], domain, var or self.var)

    def order(self) -> int:
        """Index of the lowest nonzero coefficient (-1 for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.domain == other.domain and self.var == other.var and self.coeffs == other.coeffs
        o = self._coerce(other)
        return o is not None and o.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.var))

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, {self.domain!r}, {self.var!r})"

    def __str__(self):
        return format_poly(self)


def _coeff_str(c) -> str:
    s = str(c)
    if isinstance(c, RatFunc) and not c.is_constant():
        return f"({s})"
    return s


def _qq_mul(a, b) -> list:
    """Product of Fraction coefficient lists via one integer convolution."""
    da = 1
    for c in a:
        da = lcm(da, c.denominator)
    db = 1
    for c in b:
        db = lcm(db, c.denominator)
    ia = [c.numerator * (da // c.denominator) for c in a]
    ib = [c.numerator * (db // c.denominator) for c in b]
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(ia):
        if x:
            for j, y in enumerate(ib):
                res[i + j] += x * y
    d = da * db
    return [Fraction(x, d) for x in res]


def _qq_divmod(a, b):
    """Division of Fraction lists via integer pseudo-division."""
    da = 1
    for c in a:
        da = lcm(da, c.denominator)
    db = 1
    for c in b:
        db = lcm(db, c.denominator)
    r = [c.numerator * (da // c.denominator) for c in a]
    B = [c.numerator * (db // c.denominator) for c in b]
    n, m, lb = len(r) - len(B), len(B) - 1, B[-1]
    q = [0] * (n + 1)
    # afterwards lb^(n+1) * A = q * B + r
    for k in range(n, -1, -1):
        c = r[k + m]
        q = [x * lb for x in q]
        q[k] = c
        r = [x * lb for x in r]
        if c:
            for j in range(m + 1):
                r[k + j] -= c * B[j]
    scale = lb ** (n + 1) * da
    return [Fraction(x * db, scale) for x in q], [Fraction(x, scale) for x in r[:m]]


def _gf_mul(a, b, p: int) -> list:
    ia = [c.value for c in a]
    ib = [c.value for c in b]
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(ia):
        if x:
            for j, y in enumerate(ib):
                res[i + j] += x * y
    return [GFElem(x, p) for x in res]


def _gf_divmod(a, b, p: int):
    r = [c.value for c in a]
    B = [c.value for c in b]
    m = len(B) - 1
    inv = pow(B[-1], -1, p)
    q = [0] * (len(r) - m)
    for k in range(len(r) - 1 - m, -1, -1):
        c = r[k + m] * inv % p
        q[k] = c
        if c:
            for j in range(m + 1):
                r[k + j] -= c * B[j]
    return [GFElem(x, p) for x in q], [GFElem(x, p) for x in r[:m]]


def format_poly(f: Poly) -> str:
    """Render in the expression syntax accepted by the parser."""
    if not f.coeffs:
        return "0"
    terms = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        mon = "" if i == 0 else (f.var if i == 1 else f"{f.var}^{i}")
        neg = False
        if isinstance(c, Fraction) and c < 0:
            neg, c = True, -c
        elif isinstance(c, RatFunc) and c.is_constant() and isinstance(c.constant_value(), Fraction) \
                and c.constant_value() < 0:
            neg, c = True, -c
        if mon and c == f.domain.one:
            body = mon
        elif mon:
            body = f"{_coeff_str(c)}*{mon}"
        else:
            body = _coeff_str(c)
        terms.append(("-" if neg else "+", body))
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# gcd and squarefree decomposition


def _primitive_int(cs) -> list[int]:
    """Scale a nonzero list of Fractions to a primitive integer list with positive lc."""
    den = 1
    for c in cs:
        den = lcm(den, c.denominator)
    return _int_primitive([c.numerator * (den // c.denominator) for c in cs])


def _int_primitive(ints: list[int]) -> list[int]:
    g = 0
    for x in ints:
        g = gcd(g, x)
    if ints[-1] < 0:
        g = -g
    return [x // g for x in ints]


def _int_prem(f: list[int], g: list[int]) -> list[int]:
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(r) - 1 >= dg and r:
        k = len(r) - 1 - dg
        lr = r[-1]
        r = [lg * x for x in r]
        for j in range(dg + 1):
            r[k + j] -= lr * g[j]
        while r and r[-1] == 0:
            r.pop()
    return r


def _qq_gcd(f: Poly, g: Poly) -> Poly:
    a = _primitive_int(f.coeffs)
    b = _primitive_int(g.coeffs)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, (_int_primitive(r) if r else [])
    return Poly._raw([Fraction(x, a[-1]) for x in a], f.domain, f.var)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    f._check(g)
    if not f.coeffs:
        return g.monic()
    if not g.coeffs:
        return f.monic()
    if f.degree == 0 or g.degree == 0:
        return Poly._raw([f.domain.one], f.domain, f.var)
    if f.domain == QQ:
        return _qq_gcd(f, g)
    a, b = f, g
    while b.coeffs:
        a, b = b, (a % b).monic()
    return a.monic()


def squarefree_decompose(f: Poly):
    """Yun's algorithm.

    Returns ``(scalar, [(factor, multiplicity), ...])`` with monic, squarefree,
    pairwise coprime factors and ``scalar * prod(factor**mult) == f``.
    Requires characteristic 0 or ``p > deg f``.
    """
    if not f.coeffs:
        raise ValueError("squarefree decomposition of the zero polynomial")
    p = f.domain.characteristic
    if p and p <= f.degree:
        raise CharacteristicError(f"characteristic {p} <= degree {f.degree}")
    scalar = f.lc
    f = f.monic()
    out = []
    if f.degree == 0:
        return scalar, out
    df = f.derivative()
    a0 = poly_gcd(f, df)
    b = f.exact_div(a0)
    c = df.exact_div(a0)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return scalar, out


# ---------------------------------------------------------------------------
# Rational functions


class RationalFunctionField:
    """k(var) for a coefficient field k (QQ, GF(p), or another function field)."""

    def __init__(self, base, var: str = "t"):
        self.base = base
        self.var = var
        self.characteristic = base.characteristic
        self.zero = RatFunc._raw(Poly._raw([], base, var), Poly._raw([base.one], base, var), self)
        self.one = RatFunc._raw(Poly._raw([base.one], base, var), Poly._raw([base.one], base, var), self)

    def __call__(self, x) -> RatFunc:
        if isinstance(x, RatFunc) and x.field == self:
            return x
        if isinstance(x, Poly) and x.var == self.var:
            if x.domain != self.base or x.var != self.var:
                raise DomainError(f"polynomial over {x.domain!r} in {x.var} is not in {self!r}")
            return RatFunc._raw(x, Poly._raw([self.base.one], self.base, self.var), self)
        c = self.base(x)
        return RatFunc._raw(Poly._raw([c], self.base, self.var),
                            Poly._raw([self.base.one], self.base, self.var), self)

    def gen(self) -> RatFunc:
        return self(Poly.gen(self.base, self.var))

    def poly(self, coeffs) -> Poly:
        return Poly(coeffs, self.base, self.var)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.var == self.var and other.base == self.base

    def __hash__(self):
        return hash(("Frac", self.base, self.var))

    def __repr__(self):
        return f"{self.base!r}({self.var})"


class RatFunc:
    """Reduced quotient num/den with den monic."""

    __slots__ = ("num", "den", "field")

    def __init__(self, num: Poly, den: Poly, field: RationalFunctionField):
        num._check(den)
        if not den.coeffs:
            raise ZeroDivisionError("rational function with zero denominator")
        num, den = _reduce(num, den)
        self.num, self.den, self.field = num, den, field

    @classmethod
    def _raw(cls, num: Poly, den: Poly, field) -> RatFunc:
        r = object.__new__(cls)
        r.num, r.den, r.field = num, den, field
        return r

    def _other(self, other):
        if isinstance(other, RatFunc):
            if other.field == self.field:
                return other
            try:
                return self.field(other)  # a constant from the base field
            except (DomainError, TypeError):
                raise DomainError(f"{self.field!r} vs {other.field!r}") from None
        try:
            return self.field(other)
        except (DomainError, TypeError):
            return None

    def _make(self, num: Poly, den: Poly) -> RatFunc:
        return RatFunc._raw(*_reduce(num, den), self.field)

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return self._make(self.num + o.num, self.den)
        return self._make(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den, self.field)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.den.degree == 0 and o.num.degree == 0:
            if not o.num.coeffs:
                return self.field.zero
            return RatFunc._raw(self.num.scale(o.num.coeffs[0]), self.den, self.field)
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        num = (self.num // g1) * (o.num // g2)
        den = (self.den // g2) * (o.den // g1)
        return RatFunc._raw(*_normalize_lc(num, den), self.field)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self.num.coeffs:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc._raw(*_normalize_lc(self.den, self.num), self.field)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num ** n, self.den ** n, self.field)

    def __bool__(self):
        return bool(self.num.coeffs)

    def __eq__(self, other):
        o = self._other(other) if not isinstance(other, RatFunc) else other
        if o is None or not isinstance(o, RatFunc):
            return NotImplemented
        return self.field == o.field and self.num.coeffs == o.num.coeffs and self.den.coeffs == o.den.coeffs

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self):
        return self.num[0]

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.degree == 0:
            return format_poly(self.num)
        n = format_poly(self.num)
        if len(self.num.coeffs) - sum(1 for c in self.num.coeffs if not c) > 1:
            n = f"({n})"
        return f"{n}/({format_poly(self.den)})"


def _normalize_lc(num: Poly, den: Poly):
    lc = den.lc
    if lc == den.domain.one:
        return num, den
    inv = den.domain.one / lc
    return num.scale(inv), den.scale(inv)


def _reduce(num: Poly, den: Poly):
    if not num.coeffs:
        return num, Poly._raw([den.domain.one], den.domain, den.var)
    if den.degree > 0 and num.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
    return _normalize_lc(num, den)


def evaluate(f: RatFunc, x):
    """Value of f at a point of the coefficient field."""
    d = f.den(x)
    if not d:
        raise PoleError(f"{f} has a pole at {x}")
    return f.num(x) / d
