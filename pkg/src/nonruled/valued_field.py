"""Valued base fields (E, v) with values in Z or Z^2 (lexicographic).

Three kinds are supported:

* ``padic``      Q with the p-adic valuation, residue field F_p.
* ``tadic``      k(t) with the t-adic valuation, k = Q or F_p, residue field k.
* ``composite``  Q(t) with the rank-2 valuation (ord_t, v_p of the leading
                 t-coefficient), residue field F_p.

Elements are plain domain elements (``Fraction`` or ``RatFunc``); the
:class:`ValuedField` object interprets them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import isqrt

from .exact_algebra import (
    QQ, GFElem, Poly, PrimeField, RatFunc, RationalFunctionField, is_prime,
)


class ValuationError(ValueError):
    pass


@total_ordering
class Value:
    """Element of the divisible hull of Z^rank, or INF."""

    __slots__ = ("components",)

    def __init__(self, components):
        self.components = None if components is None else tuple(Fraction(c) for c in components)

    @property
    def is_inf(self) -> bool:
        return self.components is None

    @property
    def rank(self) -> int:
        return 0 if self.components is None else len(self.components)

    def __add__(self, other: Value) -> Value:
        if self.is_inf or other.is_inf:
            return INF
        if len(self.components) != len(other.components):
            raise ValueError("rank mismatch")
        return Value(a + b for a, b in zip(self.components, other.components))

    def __neg__(self) -> Value:
        if self.is_inf:
            raise ValueError("cannot negate INF")
        return Value(-c for c in self.components)

    def __sub__(self, other: Value) -> Value:
        return self + (-other)

    def __mul__(self, k) -> Value:
        if self.is_inf:
            if k == 0:
                raise ValueError("0 * INF")
            return INF
        return Value(c * k for c in self.components)

    __rmul__ = __mul__

    def __truediv__(self, k) -> Value:
        if self.is_inf:
            return INF
        return Value(c / Fraction(k) for c in self.components)

    def __eq__(self, other):
        if not isinstance(other, Value):
            return NotImplemented
        return self.components == other.components

    def __lt__(self, other: Value):
        if self.is_inf:
            return False
        if other.is_inf:
            return True
        return self.components < other.components

    def __hash__(self):
        return hash(self.components)

    def is_zero(self) -> bool:
        return not self.is_inf and all(c == 0 for c in self.components)

    def is_integral(self) -> bool:
        return not self.is_inf and all(c.denominator == 1 for c in self.components)

    def to_json(self):
        if self.is_inf:
            return "inf"
        return [f"{c.numerator}/{c.denominator}" for c in self.components]

    @classmethod
    def from_json(cls, data) -> Value:
        if data == "inf":
            return INF
        return cls(Fraction(s) for s in data)

    def __repr__(self):
        if self.is_inf:
            return "INF"
        return "(" + ", ".join(str(c) for c in self.components) + ")"


INF = Value(None)


def _vp(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def padic_order(x: Fraction, p: int) -> int | None:
    if x == 0:
        return None
    return _vp(x.numerator, p) - _vp(x.denominator, p)


@dataclass(frozen=True)
class FieldDescriptor:
    kind: str  # "padic" | "tadic" | "composite"
    p: int | None = None  # prime for padic/composite; residue prime for tadic over F_p
    semantics: str = "exact"  # "exact" | "real-signs"

    def __post_init__(self):
        if self.kind not in ("padic", "tadic", "composite"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind in ("padic", "composite") and self.p is None:
            raise ValueError(f"{self.kind} field needs a prime p")
        if self.p is not None:
            if not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.p in (2, 3):
                raise ValueError("residue characteristic must not be 2 or 3")
        if self.semantics not in ("exact", "real-signs"):
            raise ValueError(f"unknown residue semantics {self.semantics!r}")
        if self.semantics == "real-signs" and not (self.kind == "tadic" and self.p is None):
            raise ValueError("real-signs semantics only applies to t-adic fields over Q")

    @property
    def rank(self) -> int:
        return 2 if self.kind == "composite" else 1

    def to_json(self) -> dict:
        d = {"kind": self.kind}
        if self.p is not None:
            d["p"] = self.p
        if self.semantics != "exact":
            d["semantics"] = self.semantics
        return d

    @classmethod
    def from_json(cls, data) -> FieldDescriptor:
        """Accept a dict or a shorthand such as ``padic:5``, ``tadic:Q:real``, ``tadic:F7``."""
        if isinstance(data, str):
            s = data.strip()
            if s.startswith("{"):
                return cls.from_json(json.loads(s))
            parts = s.split(":")
            kind = parts[0]
            semantics = "exact"
            if parts[-1] in ("real", "real-signs"):
                semantics = "real-signs"
                parts = parts[:-1]
            elif parts[-1] == "exact":
                parts = parts[:-1]
            p = None
            if len(parts) > 1:
                arg = parts[1]
                if arg in ("Q", "QQ"):
                    p = None
                else:
                    p = int(arg.lstrip("Fp"))
            return cls(kind, p, semantics)
        if not isinstance(data, dict):
            raise ValueError(f"bad field descriptor {data!r}")
        p = data.get("p")
        return cls(data["kind"], None if p is None else int(p), data.get("semantics", "exact"))

    def __str__(self):
        if self.kind == "tadic":
            base = "Q" if self.p is None else f"F{self.p}"
            s = f"tadic:{base}"
        else:
            s = f"{self.kind}:{self.p}"
        return s + (":real" if self.semantics == "real-signs" else "")


class ValuedField:
    """The valued field (E, v) described by a :class:`FieldDescriptor`."""

    def __init__(self, desc: FieldDescriptor):
        self.desc = desc
        self.rank = desc.rank
        self.semantics = desc.semantics
        if desc.kind == "padic":
            self.domain = QQ
            self.residue_field = PrimeField(desc.p)
        elif desc.kind == "tadic":
            k = QQ if desc.p is None else PrimeField(desc.p)
            self.domain = RationalFunctionField(k, "t")
            self.residue_field = k
        else:
            self.domain = RationalFunctionField(QQ, "t")
            self.residue_field = PrimeField(desc.p)
        self.zero_value = Value([0] * self.rank)

    @classmethod
    def parse(cls, spec) -> ValuedField:
        return cls(spec if isinstance(spec, FieldDescriptor) else FieldDescriptor.from_json(spec))

    @property
    def has_t(self) -> bool:
        return self.desc.kind != "padic"

    @property
    def t(self) -> RatFunc:
        if not self.has_t:
            raise ValueError("Q with a p-adic valuation has no variable t")
        return self.domain.gen()

    def __call__(self, x):
        return self.domain(x)

    def __eq__(self, other):
        return isinstance(other, ValuedField) and other.desc == self.desc

    def __hash__(self):
        return hash(self.desc)

    def __repr__(self):
        return f"ValuedField({self.desc})"

    # -- valuation
    def valuate(self, x) -> Value:
        x = self.domain(x)
        if not x:
            return INF
        kind = self.desc.kind
        if kind == "padic":
            return Value([padic_order(x, self.desc.p)])
        k = x.num.order() - x.den.order()
        if kind == "tadic":
            return Value([k])
        lead = x.num.coeffs[x.num.order()] / x.den.coeffs[x.den.order()]
        return Value([k, padic_order(lead, self.desc.p)])

    def residue(self, x):
        x = self.domain(x)
        val = self.valuate(x)
        if val < self.zero_value:
            raise ValuationError(f"residue of {x} with negative value {val}")
        if val > self.zero_value:
            return self.residue_field.zero
        kind = self.desc.kind
        if kind == "padic":
            return self.residue_field(x)
        lead = x.num.coeffs[x.num.order()] / x.den.coeffs[x.den.order()]
        return self.residue_field(lead)

    def section(self, gamma: Value):
        if not gamma.is_integral():
            raise ValuationError(f"{gamma} is not in the value group")
        if gamma.rank != self.rank:
            raise ValueError("rank mismatch")
        kind = self.desc.kind
        if kind == "padic":
            return Fraction(self.desc.p) ** int(gamma.components[0])
        i = int(gamma.components[0])
        result = self.t ** i
        if kind == "composite":
            result = result * Fraction(self.desc.p) ** int(gamma.components[1])
        return result

    def in_index_subgroup(self, gamma: Value, n: int) -> bool:
        if gamma.is_inf or not gamma.is_integral():
            raise ValuationError(f"{gamma} is not in the value group")
        return all(c.numerator % n == 0 for c in gamma.components)

    def residue_is_square(self, r) -> bool:
        """Square test in Ev; under real-signs semantics Ev behaves like R."""
        if isinstance(r, GFElem):
            return r.is_square()
        r = Fraction(r)
        if self.semantics == "real-signs":
            return r >= 0
        return r >= 0 and _is_square_int(r.numerator) and _is_square_int(r.denominator)

    def lift_residue(self, r):
        """An element of E with residue r (integers lift F_p)."""
        if isinstance(r, GFElem):
            return self.domain(r.value)
        return self.domain(r)

    def residue_poly(self, f: Poly, var: str = "s") -> Poly:
        return f.map_coeffs(self.residue, self.residue_field, var)


def _is_square_int(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n
