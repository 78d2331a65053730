"""Scroll binomial edge ideals of closed graphs and their Artinian reductions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graphs import ClosedGraph, edges_from_cliques
from .polyfield import DEFAULT_PRIME, Monomial, Polynomial, mono_divides


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: frozenset[tuple[int, ...]]

    def __post_init__(self):
        gens = set(self.gens)
        minimal = frozenset(g for g in gens
                            if not any(h != g and mono_divides(h, g) for h in gens))
        object.__setattr__(self, "gens", minimal)

    @property
    def generators(self) -> list[Monomial]:
        return [Monomial(e) for e in sorted(self.gens, reverse=True)]

    def contains(self, m: Monomial | tuple) -> bool:
        e = m.exps if isinstance(m, Monomial) else tuple(m)
        return any(mono_divides(g, e) for g in self.gens)

    def without_variables(self, variables) -> "MonomialIdeal":
        pos = [k - 1 for k in variables]
        return MonomialIdeal(self.nvars, frozenset(
            g for g in self.gens if all(g[k] == 0 for k in pos)))

    def polynomials(self, prime: int = DEFAULT_PRIME) -> list[Polynomial]:
        return [Polynomial.monomial(m, 1, prime) for m in self.generators]


@dataclass(frozen=True)
class IdealPresentation:
    nvars: int
    generators: tuple[Polynomial, ...]
    kind: str = "full"  # "full" | "artinian"
    killed: tuple[int, ...] = ()
    prime: int = DEFAULT_PRIME
    variables: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if any(g.is_zero() for g in self.generators):
            raise ValueError("presentation generators must be nonzero")
        if not self.variables:
            killed = set(self.killed)
            object.__setattr__(self, "variables", tuple(
                k for k in range(1, self.nvars + 1) if k not in killed))

    def with_killed_variables(self) -> list[Polynomial]:
        """Generators plus the killed variables, all in the ambient ring."""
        return list(self.generators) + [Polynomial.var(k, self.nvars, self.prime)
                                        for k in self.killed]


def edge_generator(i: int, j: int, n: int, prime: int = DEFAULT_PRIME) -> Polynomial:
    """The 2-minor ``x_i x_{j+1} - x_{i+1} x_j`` of the Hankel matrix."""
    if not (1 <= i < j <= n):
        raise IndexError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    nv = n + 1
    return Polynomial(nv, {
        Monomial.from_indices((i, j + 1), nv).exps: 1,
        Monomial.from_indices((i + 1, j), nv).exps: -1,
    }, prime)


def build_ideal(g: ClosedGraph, prime: int = DEFAULT_PRIME) -> IdealPresentation:
    edges = sorted(edges_from_cliques(g).edges)
    gens = tuple(edge_generator(i, j, g.n, prime) for i, j in edges)
    return IdealPresentation(g.n + 1, gens, "full", (), prime)


def block_initial_ideal(n: int, blocks) -> MonomialIdeal:
    nv = n + 1
    gens = set()
    for lo, hi in blocks:
        for k, l in itertools.combinations_with_replacement(range(lo, hi + 1), 2):
            gens.add(Monomial.from_indices((k, l), nv).exps)
    return MonomialIdeal(nv, frozenset(gens))


def predicted_initial(g: ClosedGraph) -> MonomialIdeal:
    """All quadrics inside each block ``{x_{a_i+1}, ..., x_{b_i}}``."""
    return block_initial_ideal(g.n, g.blocks())


def artinian_reduce(p: IdealPresentation, g: ClosedGraph) -> IdealPresentation:
    """Set ``x_1``, ``x_{n+1}`` and later components' first variables to zero."""
    killed = tuple(g.killed_variables())
    gens = []
    for f in p.generators:
        h = f.substitute_zero(killed)
        if h:
            gens.append(h)
    return IdealPresentation(p.nvars, tuple(gens), "artinian", killed, p.prime)


def monomial_presentation(g: ClosedGraph, prime: int = DEFAULT_PRIME,
                          artinian: bool = True) -> IdealPresentation:
    """The predicted initial ideal as a presentation (Artinian-reduced by default)."""
    gens = tuple(predicted_initial(g).polynomials(prime))
    killed = tuple(g.killed_variables()) if artinian else ()
    return IdealPresentation(g.n + 1, gens, "artinian" if artinian else "full",
                             killed, prime)
