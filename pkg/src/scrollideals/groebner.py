"""Buchberger's algorithm, normal forms and regular-element checks."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .polyfield import (
    DimensionError,
    Monomial,
    Polynomial,
    degrevlex_key,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, auto-reduced, sorted by leading monomial."""

    generators: tuple[Polynomial, ...]
    nvars: int
    prime: int
    order: str = "degrevlex"

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def leading_exps(self) -> list[tuple]:
        return [g.leading_exp() for g in self.generators]

    def leading_monomials(self) -> list[Monomial]:
        return [Monomial(e) for e in self.leading_exps()]

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()


class _Element:
    __slots__ = ("lm", "tail", "poly")

    def __init__(self, poly: Polynomial):
        # poly is monic; tail holds -c for each non-leading term, so that
        # lm == sum(c * m for m, c in tail) modulo this element
        self.poly = poly
        self.lm = poly.leading_exp()
        p = poly.prime
        self.tail = [(e, p - c) for e, c in poly.coeffs.items() if e != self.lm]


def _reduce_dict(f: dict, elements: Sequence[_Element], prime: int,
                 key=degrevlex_key, full: bool = True) -> dict:
    """Remainder of ``f`` (exps -> coeff) on division by ``elements``."""
    f = dict(f)
    rem: dict = {}
    while f:
        m = max(f, key=key)
        c = f.pop(m)
        for el in elements:
            if mono_divides(el.lm, m):
                q = mono_div(m, el.lm)
                for t, tc in el.tail:
                    e = mono_mul(q, t)
                    v = (f.get(e, 0) + c * tc) % prime
                    if v:
                        f[e] = v
                    else:
                        f.pop(e, None)
                break
        else:
            rem[m] = c
            if not full:
                rem.update(f)
                return rem
    return rem


def _spoly(a: _Element, b: _Element, prime: int) -> dict:
    lcm = mono_lcm(a.lm, b.lm)
    qa, qb = mono_div(lcm, a.lm), mono_div(lcm, b.lm)
    out: dict = {}
    for e, c in a.poly.coeffs.items():
        if e == a.lm:
            continue
        k = mono_mul(qa, e)
        out[k] = (out.get(k, 0) + c) % prime
    for e, c in b.poly.coeffs.items():
        if e == b.lm:
            continue
        k = mono_mul(qb, e)
        out[k] = (out.get(k, 0) - c) % prime
    return {e: c for e, c in out.items() if c}


def _monic_dict(f: dict, nvars: int, prime: int) -> Polynomial:
    poly = Polynomial._raw(nvars, f, prime)
    return poly.monic()


def buchberger(gens: Iterable[Polynomial], nvars: int | None = None,
               prime: int | None = None) -> GroebnerBasis:
    """Reduced degrevlex Groebner basis of the ideal generated by ``gens``.

    Pairs are processed by smallest lcm degree, ties broken by generator
    indices; Buchberger's coprime and chain criteria prune pairs.
    """
    gens = [g for g in gens]
    if gens:
        nvars = gens[0].nvars if nvars is None else nvars
        prime = gens[0].prime if prime is None else prime
        for g in gens:
            if g.nvars != nvars:
                raise DimensionError("generators over different variable counts")
            if g.prime != prime:
                raise ValueError("generators over different primes")
    if nvars is None:
        raise ValueError("empty generator list needs an explicit nvars")
    if prime is None:
        from .polyfield import DEFAULT_PRIME
        prime = DEFAULT_PRIME

    elements: list[_Element] = []
    pairs: list[tuple] = []
    done: set[tuple[int, int]] = set()

    def add(poly: Polynomial):
        new = _Element(poly.monic())
        idx = len(elements)
        for i, el in enumerate(elements):
            heapq.heappush(pairs, (sum(mono_lcm(el.lm, new.lm)), i, idx))
        elements.append(new)

    for g in sorted((g for g in gens if g), key=lambda g: degrevlex_key(g.leading_exp())):
        r = _reduce_dict(g.coeffs, elements, prime)
        if r:
            add(Polynomial._raw(nvars, r, prime))

    while pairs:
        _, i, j = heapq.heappop(pairs)
        done.add((i, j))
        a, b = elements[i], elements[j]
        if mono_coprime(a.lm, b.lm):
            continue
        lcm = mono_lcm(a.lm, b.lm)
        if _chain_criterion(i, j, lcm, elements, done):
            continue
        r = _reduce_dict(_spoly(a, b, prime), elements, prime)
        if r:
            add(Polynomial._raw(nvars, r, prime))

    return _interreduce(elements, nvars, prime)


def _chain_criterion(i, j, lcm, elements, done) -> bool:
    for k, el in enumerate(elements):
        if k == i or k == j:
            continue
        if not mono_divides(el.lm, lcm):
            continue
        ik = (min(i, k), max(i, k))
        jk = (min(j, k), max(j, k))
        if ik in done and jk in done:
            return True
    return False


def _interreduce(elements: list[_Element], nvars: int, prime: int) -> GroebnerBasis:
    # drop elements whose leading monomial is divisible by another's
    keep: list[_Element] = []
    for el in sorted(elements, key=lambda e: degrevlex_key(e.lm)):
        if not any(mono_divides(k.lm, el.lm) for k in keep):
            keep.append(el)
    reduced = []
    for idx, el in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        tail = {e: c for e, c in el.poly.coeffs.items() if e != el.lm}
        r = _reduce_dict(tail, others, prime)
        r[el.lm] = el.poly.coeffs[el.lm]
        reduced.append(_monic_dict(r, nvars, prime))
    reduced.sort(key=lambda g: degrevlex_key(g.leading_exp()))
    return GroebnerBasis(tuple(reduced), nvars, prime)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Unique remainder of ``f`` modulo the reduced basis ``gb``."""
    if f.nvars != gb.nvars:
        raise DimensionError(f"polynomial over {f.nvars} variables, basis over {gb.nvars}")
    elements = [_Element(g) for g in gb.generators]
    return Polynomial._raw(f.nvars, _reduce_dict(f.coeffs, elements, gb.prime), gb.prime)


def is_quadratic(gb: GroebnerBasis) -> bool:
    return all(g.total_degree() == 2 for g in gb.generators)


class NormalFormCache:
    """Memoized normal forms of monomials modulo a reduced Groebner basis.

    The normal form is linear, and rewriting ``u * lm(g)`` as ``u * (lm(g) - g)``
    only produces smaller monomials, so normal forms of monomials can be
    built recursively and shared across a whole quotient computation.
    """

    def __init__(self, gb: GroebnerBasis):
        self.gb = gb
        self.prime = gb.prime
        self._elements = [_Element(g) for g in gb.generators]
        self._cache: dict[tuple, dict] = {}

    def is_standard(self, m: tuple) -> bool:
        return not any(mono_divides(el.lm, m) for el in self._elements)

    def monomial(self, m: tuple) -> dict:
        """Normal form of ``m`` as ``{exps: coeff}``; do not mutate the result."""
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        p = self.prime
        for el in self._elements:
            if mono_divides(el.lm, m):
                q = mono_div(m, el.lm)
                out: dict = {}
                for t, tc in el.tail:
                    for e, c in self.monomial(mono_mul(q, t)).items():
                        v = (out.get(e, 0) + tc * c) % p
                        if v:
                            out[e] = v
                        else:
                            out.pop(e, None)
                break
        else:
            out = {m: 1}
        self._cache[m] = out
        return out

    def reduce(self, f: dict) -> dict:
        p = self.prime
        out: dict = {}
        for m, c in f.items():
            for e, v in self.monomial(m).items():
                w = (out.get(e, 0) + c * v) % p
                if w:
                    out[e] = w
                else:
                    out.pop(e, None)
        return out


# --- Hilbert numerators of monomial ideals --------------------------------

def _minimalize(gens: Iterable[tuple]) -> tuple[tuple, ...]:
    out: list[tuple] = []
    for g in sorted(set(gens), key=sum):
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out))


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


@lru_cache(maxsize=100_000)
def _knum(gens: tuple[tuple, ...]) -> tuple[int, ...]:
    if not gens:
        return (1,)
    counts: dict[int, int] = {}
    for g in gens:
        for k, e in enumerate(g):
            if e:
                counts[k] = counts.get(k, 0) + 1
    shared = [k for k, c in counts.items() if c > 1]
    if not shared:
        out = [1]
        for g in gens:
            factor = [0] * (sum(g) + 1)
            factor[0], factor[-1] = 1, -1
            out = _poly_mul(out, factor)
        return tuple(out)
    # pivot on the most shared variable: K(M) = K(M + x) + t K(M : x)
    v = max(shared, key=lambda k: (counts[k], -k))
    nvars = len(gens[0])
    xv = tuple(1 if k == v else 0 for k in range(nvars))
    plus = _minimalize([g for g in gens if g[v] == 0] + [xv])
    colon = _minimalize([tuple(e - 1 if k == v and e else e for k, e in enumerate(g))
                         for g in gens])
    return tuple(_poly_add(list(_knum(plus)), [0] + list(_knum(colon))))


def hilbert_numerator(monomials: Iterable[tuple | Monomial], nvars: int) -> list[int]:
    """Numerator K(t) with HS(S/M) = K(t) / (1 - t)^nvars, for a monomial ideal M."""
    gens = [m.exps if isinstance(m, Monomial) else tuple(m) for m in monomials]
    if any(len(g) != nvars for g in gens):
        raise DimensionError("monomial of wrong length")
    if any(sum(g) == 0 for g in gens):
        return [0]
    return list(_knum(_minimalize(gens)))


def gb_hilbert_numerator(gb: GroebnerBasis) -> list[int]:
    return hilbert_numerator(gb.leading_exps(), gb.nvars)


def colon_by_variable_equals(gb: GroebnerBasis, v: int) -> bool:
    """True iff ``(I : x_v) = I``, i.e. ``x_v`` is a nonzerodivisor on ``S/I``.

    Uses the exact sequence ``0 -> S/(I:x)(-1) -> S/I -> S/(I,x) -> 0``:
    ``x`` is regular iff ``HS(S/(I, x)) = (1 - t) HS(S/I)``, compared as
    exact Hilbert numerators of the initial ideals.
    """
    if not 1 <= v <= gb.nvars:
        raise IndexError(f"x{v} not in a ring with {gb.nvars} variables")
    xv = Polynomial.var(v, gb.nvars, gb.prime)
    with_v = buchberger(list(gb.generators) + [xv], gb.nvars, gb.prime)
    lhs = gb_hilbert_numerator(with_v)
    rhs = _poly_mul(gb_hilbert_numerator(gb), [1, -1])
    return _strip(lhs) == _strip(rhs)


def is_regular_sequence(gb: GroebnerBasis, variables: Sequence[int]) -> list[bool]:
    """Check each ``x_v`` against ``I`` plus the variables before it."""
    results = []
    current = gb
    for v in variables:
        results.append(colon_by_variable_equals(current, v))
        current = buchberger(list(current.generators)
                             + [Polynomial.var(v, gb.nvars, gb.prime)], gb.nvars, gb.prime)
    return results


def _strip(a: list[int]) -> list[int]:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a
