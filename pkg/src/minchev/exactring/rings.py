"""Exact commutative rings with canonical element representations.

A ring object knows how to normalize, combine and print raw values; raw
values are plain Python objects (``int``, ``Fraction`` or a sorted tuple of
polynomial terms) so that matrices can store them cheaply and compare them
with ``==``.  :class:`RingElement` wraps a raw value together with its ring
for user-facing scalar arithmetic.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

from ..errors import NonUnit, RingMismatch


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def least_primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group of GF(p)."""
    if p == 2:
        return 1
    qs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise ValueError(f"no primitive root mod {p}")


class Ring:
    """Abstract exact commutative ring with identity."""

    zero: Any
    one: Any

    @property
    def spec(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __call__(self, x: Any) -> "RingElement":
        return RingElement(self, self.coerce(x))

    # raw-value arithmetic; subclasses override the ones that need reduction
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, x: Any):
        if isinstance(x, RingElement):
            if x.ring != self:
                raise RingMismatch(f"{x.ring.spec} value used in {self.spec}")
            return x.value
        if isinstance(x, bool):
            raise TypeError("bool is not a ring value")
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot coerce {x!r} into {self.spec}")

    def try_invert(self, a) -> Optional[Any]:
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        return self.try_invert(a) is not None

    def invert(self, a):
        inv = self.try_invert(a)
        if inv is None:
            raise NonUnit(f"{self.format(a)} is not a unit of {self.spec}")
        return inv

    def power(self, a, k: int):
        if k < 0:
            a, k = self.invert(a), -k
        result, base = self.one, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def format(self, a) -> str:
        return str(a)

    def parse(self, s: str):
        return self.from_int(int(s))

    @property
    def is_finite(self) -> bool:
        return False

    def elements(self):
        raise TypeError(f"{self.spec} is infinite")


class Integers(Ring):
    zero = 0
    one = 1

    @property
    def spec(self) -> str:
        return "int"

    def from_int(self, n: int) -> int:
        return n

    def try_invert(self, a: int) -> Optional[int]:
        return a if a in (1, -1) else None


class Rationals(Ring):
    zero = Fraction(0)
    one = Fraction(1)

    @property
    def spec(self) -> str:
        return "rat"

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, x: Any):
        if isinstance(x, Fraction):
            return x
        return super().coerce(x)

    def try_invert(self, a: Fraction) -> Optional[Fraction]:
        return None if a == 0 else 1 / a

    def format(self, a: Fraction) -> str:
        return f"{a.numerator}/{a.denominator}" if a.denominator != 1 else str(a.numerator)

    def parse(self, s: str) -> Fraction:
        return Fraction(s)


class Modular(Ring):
    """The residue ring Z/nZ, values are least nonnegative residues."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError(f"modulus must be >= 2, got {n}")
        self.n = n
        self.zero = 0
        self.one = 1 % n

    @property
    def spec(self) -> str:
        return f"mod:{self.n}"

    def add(self, a, b):
        return (a + b) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def mul(self, a, b):
        return a * b % self.n

    def neg(self, a):
        return -a % self.n

    def from_int(self, n: int) -> int:
        return n % self.n

    def try_invert(self, a: int) -> Optional[int]:
        if math.gcd(a, self.n) != 1:
            return None
        return pow(a, -1, self.n)

    @property
    def is_finite(self) -> bool:
        return True

    def elements(self):
        return range(self.n)


class PrimeField(Modular):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        super().__init__(p)
        self.p = p

    @property
    def spec(self) -> str:
        return f"gfp:{self.p}"

    def units(self):
        return range(1, self.p)

    @property
    def generator(self) -> int:
        return least_primitive_root(self.p)


class IntPolynomial(Ring):
    """Z[x_1, ..., x_k]; a value is a sorted tuple of ``(exponents, coeff)``."""

    zero = ()

    def __init__(self, variables: Sequence[str] = ("t", "u")):
        variables = tuple(variables)
        if len(variables) < 2 or len(set(variables)) != len(variables):
            raise ValueError("need at least two distinct variable names")
        self.variables = variables
        self.one = ((tuple(0 for _ in variables), 1),)

    @property
    def spec(self) -> str:
        return "poly:" + ",".join(self.variables)

    def gen(self, name: str):
        """The raw value of the variable called ``name``."""
        k = self.variables.index(name)
        return (tuple(int(i == k) for i in range(len(self.variables))), 1),

    @staticmethod
    def _normalize(terms: dict) -> tuple:
        return tuple(sorted((e, c) for e, c in terms.items() if c != 0))

    def add(self, a, b):
        out = dict(a)
        for e, c in b:
            out[e] = out.get(e, 0) + c
        return self._normalize(out)

    def neg(self, a):
        return tuple((e, -c) for e, c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        out: dict = {}
        for e1, c1 in a:
            for e2, c2 in b:
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._normalize(out)

    def from_int(self, n: int):
        return self._normalize({tuple(0 for _ in self.variables): n})

    def coerce(self, x: Any):
        if isinstance(x, tuple):
            terms: dict = {}
            for e, c in x:
                terms[tuple(e)] = terms.get(tuple(e), 0) + c
            return self._normalize(terms)
        return super().coerce(x)

    def try_invert(self, a):
        if len(a) == 1 and not any(a[0][0]) and a[0][1] in (1, -1):
            return a
        return None

    def evaluate(self, a, values: Sequence, ring: Ring):
        """Specialize the variables to raw ``values`` of another ring."""
        total = ring.zero
        for exps, c in a:
            term = ring.from_int(c)
            for v, k in zip(values, exps):
                term = ring.mul(term, ring.power(v, k))
            total = ring.add(total, term)
        return total

    def format(self, a) -> str:
        return json.dumps([[list(e), c] for e, c in a], separators=(",", ":"))

    def parse(self, s: str):
        s = s.strip()
        if not s.startswith("["):
            return self.from_int(int(s))
        terms: dict = {}
        for e, c in json.loads(s):
            if len(e) != len(self.variables):
                raise ValueError(f"monomial {e} has wrong arity")
            terms[tuple(e)] = terms.get(tuple(e), 0) + c
        return self._normalize(terms)

    def pretty(self, a) -> str:
        """Human-readable form such as ``1 - t^2``."""
        if not a:
            return "0"
        parts = []
        for exps, c in sorted(a, key=lambda ec: (sum(ec[0]), ec[0])):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, exps) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def parse_ring(spec: str) -> Ring:
    """Build a ring from ``int``, ``rat``, ``gfp:<p>``, ``mod:<n>`` or ``poly:t,u``."""
    spec = spec.strip()
    if spec == "int":
        return Integers()
    if spec == "rat":
        return Rationals()
    kind, _, arg = spec.partition(":")
    if kind == "gfp" and arg:
        return PrimeField(int(arg))
    if kind == "mod" and arg:
        return Modular(int(arg))
    if kind == "poly" and arg:
        return IntPolynomial(tuple(v.strip() for v in arg.split(",")))
    raise ValueError(f"unknown ring spec {spec!r}")


@dataclass(frozen=True)
class RingElement:
    """A raw ring value tagged with its ring, with operator support."""

    ring: Ring
    value: Any

    def _other(self, other) -> Any:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring.spec} vs {other.ring.spec}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other)
        return NotImplemented

    def _wrap(self, v) -> "RingElement":
        return RingElement(self.ring, v)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ring.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ring.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ring.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ring.mul(self.value, o))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.ring.neg(self.value))

    def __pow__(self, k: int):
        return self._wrap(self.ring.power(self.value, k))

    def __eq__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value == o

    def __hash__(self):
        return hash((self.ring.spec, self.value))

    def try_invert(self) -> Optional["RingElement"]:
        inv = self.ring.try_invert(self.value)
        return None if inv is None else self._wrap(inv)

    def inverse(self) -> "RingElement":
        return self._wrap(self.ring.invert(self.value))

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.value)

    def __str__(self) -> str:
        return self.ring.format(self.value)

    def __repr__(self) -> str:
        return f"{self.ring.spec}({self.ring.format(self.value)})"
