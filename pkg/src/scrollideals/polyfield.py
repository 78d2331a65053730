"""Prime-field scalars, monomials under degrevlex, and sparse polynomials.

Variables are labelled ``x1 .. xN``; exponent position ``k`` holds the power
of ``x_{k+1}``.  Monomials are plain exponent tuples internally; the
:class:`Monomial` wrapper is the public face.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

DEFAULT_PRIME = 32003

LESS, EQUAL, GREATER = -1, 0, 1


class DimensionError(ValueError):
    """Operands live in rings with different variable counts."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def degrevlex_key(e: tuple[int, ...]) -> tuple[int, ...]:
    # larger key <=> larger monomial
    return (sum(e),) + tuple(-x for x in reversed(e))


@lru_cache(maxsize=None)
def lex_key(e: tuple[int, ...]) -> tuple[int, ...]:
    return e


ORDERS = {"degrevlex": degrevlex_key, "lex": lex_key}


def cmp_degrevlex(m1: "Monomial | tuple", m2: "Monomial | tuple") -> int:
    e1 = m1.exps if isinstance(m1, Monomial) else tuple(m1)
    e2 = m2.exps if isinstance(m2, Monomial) else tuple(m2)
    if len(e1) != len(e2):
        raise DimensionError(f"monomials over {len(e1)} and {len(e2)} variables")
    k1, k2 = degrevlex_key(e1), degrevlex_key(e2)
    return (k1 > k2) - (k1 < k2)


# exponent-tuple helpers; hot paths in groebner use these directly

def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


@dataclass(frozen=True)
class FieldScalar:
    value: int
    modulus: int = DEFAULT_PRIME

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldScalar):
            if other.modulus != self.modulus:
                raise ValueError("scalars over different primes")
            return other.value
        return int(other) % self.modulus

    def __add__(self, other):
        return FieldScalar(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldScalar(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return FieldScalar(self._coerce(other) - self.value, self.modulus)

    def __mul__(self, other):
        return FieldScalar(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldScalar(-self.value, self.modulus)

    def inverse(self) -> "FieldScalar":
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return FieldScalar(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        return self * FieldScalar(self._coerce(other), self.modulus).inverse()

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def symmetric(self) -> int:
        """Representative in (-p/2, p/2]."""
        v = self.value
        return v - self.modulus if v > self.modulus // 2 else v


@dataclass(frozen=True, order=False)
class Monomial:
    exps: tuple[int, ...]
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent")
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "degree", sum(exps))

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def var(cls, k: int, nvars: int, power: int = 1) -> "Monomial":
        """The monomial ``x_k^power`` (1-based ``k``)."""
        if not 1 <= k <= nvars:
            raise IndexError(f"x{k} not in a ring with {nvars} variables")
        e = [0] * nvars
        e[k - 1] = power
        return cls(tuple(e))

    @classmethod
    def from_indices(cls, indices: Iterable[int], nvars: int) -> "Monomial":
        """Product of ``x_k`` over 1-based ``indices`` (repeats allowed)."""
        e = [0] * nvars
        for k in indices:
            e[k - 1] += 1
        return cls(tuple(e))

    @property
    def nvars(self) -> int:
        return len(self.exps)

    def _check(self, other: "Monomial"):
        if len(self.exps) != len(other.exps):
            raise DimensionError(
                f"monomials over {len(self.exps)} and {len(other.exps)} variables")

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(mono_mul(self.exps, other.exps))

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return mono_divides(self.exps, other.exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(mono_div(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(mono_lcm(self.exps, other.exps))

    def support(self) -> list[int]:
        """1-based indices of the variables present."""
        return [k + 1 for k, e in enumerate(self.exps) if e]

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def __lt__(self, other):
        return cmp_degrevlex(self, other) == LESS

    def __le__(self, other):
        return cmp_degrevlex(self, other) != GREATER

    def __gt__(self, other):
        return cmp_degrevlex(self, other) == GREATER

    def __ge__(self, other):
        return cmp_degrevlex(self, other) != LESS

    def __str__(self):
        return format_monomial(self.exps)


def format_monomial(e: tuple[int, ...]) -> str:
    parts = []
    for k, x in enumerate(e):
        if x == 1:
            parts.append(f"x{k + 1}")
        elif x > 1:
            parts.append(f"x{k + 1}^{x}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """Sparse polynomial over GF(p) in ``nvars`` variables.

    ``coeffs`` maps exponent tuples to residues in ``[1, p)``.  Instances are
    treated as immutable; every operation returns a new polynomial.
    """

    __slots__ = ("nvars", "prime", "order", "coeffs", "_key")

    def __init__(self, nvars: int, coeffs: Mapping[tuple, int] | None = None,
                 prime: int = DEFAULT_PRIME, order: str = "degrevlex"):
        self.nvars = nvars
        self.prime = prime
        self.order = order
        self._key = ORDERS[order]
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise DimensionError(f"exponent {e} in a ring with {nvars} variables")
                c %= prime
                if c:
                    clean[e] = c
        self.coeffs = clean

    @classmethod
    def _raw(cls, nvars, coeffs, prime, order="degrevlex") -> "Polynomial":
        # trusted constructor: coeffs already reduced and nonzero
        obj = cls.__new__(cls)
        obj.nvars, obj.prime, obj.order = nvars, prime, order
        obj._key = ORDERS[order]
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, nvars, prime=DEFAULT_PRIME) -> "Polynomial":
        return cls(nvars, {}, prime)

    @classmethod
    def constant(cls, c: int, nvars: int, prime=DEFAULT_PRIME) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c}, prime)

    @classmethod
    def monomial(cls, m: Monomial | tuple, c: int = 1, prime=DEFAULT_PRIME) -> "Polynomial":
        e = m.exps if isinstance(m, Monomial) else tuple(m)
        return cls(len(e), {e: c}, prime)

    @classmethod
    def var(cls, k: int, nvars: int, prime=DEFAULT_PRIME) -> "Polynomial":
        return cls.monomial(Monomial.var(k, nvars), 1, prime)

    # --- inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    @property
    def terms(self) -> list[tuple[FieldScalar, Monomial]]:
        """Terms as ``(coefficient, monomial)`` pairs, strictly descending."""
        return [(FieldScalar(self.coeffs[e], self.prime), Monomial(e))
                for e in self.sorted_exps()]

    def sorted_exps(self) -> list[tuple]:
        return sorted(self.coeffs, key=self._key, reverse=True)

    def leading_exp(self) -> tuple:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading term")
        return max(self.coeffs, key=self._key)

    def leading_monomial(self) -> Monomial:
        return Monomial(self.leading_exp())

    def leading_coefficient(self) -> int:
        return self.coeffs[self.leading_exp()]

    def total_degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(sum(e) for e in self.coeffs)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.coeffs}) <= 1

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        return self.scale(pow(self.leading_coefficient(), -1, self.prime))

    # --- arithmetic -----------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise DimensionError(
                f"polynomials over {self.nvars} and {other.nvars} variables")
        if self.prime != other.prime:
            raise ValueError(f"polynomials over GF({self.prime}) and GF({other.prime})")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, FieldScalar)):
            return Polynomial.constant(int(other), self.nvars, self.prime)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.prime
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.nvars, out, p, self.order)

    __radd__ = __add__

    def __neg__(self):
        p = self.prime
        return Polynomial._raw(self.nvars, {e: p - c for e, c in self.coeffs.items()},
                               p, self.order)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "Polynomial":
        p = self.prime
        c = int(c) % p
        if c == 0:
            return Polynomial._raw(self.nvars, {}, p, self.order)
        return Polynomial._raw(self.nvars, {e: v * c % p for e, v in self.coeffs.items()},
                               p, self.order)

    def mul_term(self, c: int, m: tuple) -> "Polynomial":
        p = self.prime
        c %= p
        if c == 0:
            return Polynomial._raw(self.nvars, {}, p, self.order)
        return Polynomial._raw(
            self.nvars, {mono_mul(e, m): v * c % p for e, v in self.coeffs.items()},
            p, self.order)

    def __mul__(self, other):
        if isinstance(other, (int, FieldScalar)):
            return self.scale(int(other))
        if isinstance(other, Monomial):
            return self.mul_term(1, other.exps)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.prime
        out: dict[tuple, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = mono_mul(e1, e2)
                out[e] = (out.get(e, 0) + c1 * c2) % p
        return Polynomial._raw(self.nvars, {e: c for e, c in out.items() if c}, p, self.order)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.nvars, self.prime)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute_zero(self, variables: Iterable[int]) -> "Polynomial":
        """Set the 1-based ``variables`` to zero."""
        pos = [k - 1 for k in variables]
        return Polynomial._raw(
            self.nvars,
            {e: c for e, c in self.coeffs.items() if all(e[k] == 0 for k in pos)},
            self.prime, self.order)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.nvars == other.nvars and self.prime == other.prime
                    and self.coeffs == other.coeffs)
        if isinstance(other, int):
            return self == Polynomial.constant(other, self.nvars, self.prime)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, self.prime, frozenset(self.coeffs.items())))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.nvars}, '{self}')"


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def poly_scale(c: int, f: Polynomial) -> Polynomial:
    return f.scale(c)


# --- canonical text form ----------------------------------------------------

def format_polynomial(f: Polynomial) -> str:
    if not f.coeffs:
        return "0"
    out = []
    half = f.prime // 2
    for i, e in enumerate(f.sorted_exps()):
        c = f.coeffs[e]
        if c > half:
            c -= f.prime
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = format_monomial(e)
        if mono == "1":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


_TERM_RE = re.compile(r"([+-]?)\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str, nvars: int, prime: int = DEFAULT_PRIME) -> Polynomial:
    """Parse the canonical ``c*x1^e1*x2 - x3`` form (term order not required)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    coeffs: dict[tuple, int] = {}
    pos = 0
    s = s.replace(" ", "")
    if s == "0":
        return Polynomial.zero(nvars, prime)
    for match in _TERM_RE.finditer(s):
        if match.start() != pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        pos = match.end()
        sign, body = match.groups()
        c = 1
        e = [0] * nvars
        for factor in body.split("*"):
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if factor.isdigit():
                c *= int(factor)
                continue
            fm = _FACTOR_RE.match(factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            k = int(fm.group(1))
            if not 1 <= k <= nvars:
                raise DimensionError(f"x{k} not in a ring with {nvars} variables")
            e[k - 1] += int(fm.group(2) or 1)
        if sign == "-":
            c = -c
        key = tuple(e)
        coeffs[key] = (coeffs.get(key, 0) + c) % prime
    if pos != len(s):
        raise ValueError(f"cannot parse polynomial {text!r}")
    return Polynomial(nvars, coeffs, prime)


def iter_monomials(nvars: int, degree: int) -> Iterator[tuple[int, ...]]:
    """All exponent tuples of the given total degree."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in iter_monomials(nvars - 1, degree - first):
            yield (first,) + rest
