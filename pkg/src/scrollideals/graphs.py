"""Closed graphs as chains of maximal-clique intervals."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

Interval = tuple[int, int]


class ValidationError(ValueError):
    """Graph data violates the closed-graph invariants."""


class NotClosedError(ValidationError):
    pass


class InterleavedComponentsError(ValidationError):
    pass


class IsolatedVertexError(ValidationError):
    pass


@dataclass(frozen=True)
class CliqueComponent:
    lo: int
    hi: int
    cliques: tuple[Interval, ...]

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    @property
    def r(self) -> int:
        return len(self.cliques)

    def validate(self):
        cl = self.cliques
        if not cl:
            raise ValidationError(f"component [{self.lo},{self.hi}] has no cliques")
        if cl[0][0] != self.lo or cl[-1][1] != self.hi:
            raise ValidationError(
                f"cliques {list(cl)} do not span component [{self.lo},{self.hi}]")
        for a, b in cl:
            if a >= b:
                raise IsolatedVertexError(f"clique [{a},{b}] has fewer than two vertices")
        for (a1, b1), (a2, b2) in zip(cl, cl[1:]):
            if not (a1 < a2 and b1 < b2):
                raise ValidationError(f"cliques [{a1},{b1}], [{a2},{b2}] not strictly increasing")
            if a2 > b1:
                raise ValidationError(f"cliques [{a1},{b1}], [{a2},{b2}] are disconnected")

    def shifted(self, offset: int) -> "CliqueComponent":
        return CliqueComponent(self.lo + offset, self.hi + offset,
                               tuple((a + offset, b + offset) for a, b in self.cliques))

    def blocks(self) -> list[Interval]:
        """Index intervals ``[a_i + 1, b_i]`` carrying the degree-2 initial monomials."""
        return [(a + 1, b) for a, b in self.cliques]


@dataclass(frozen=True)
class ClosedGraph:
    n: int
    components: tuple[CliqueComponent, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError("closed graphs need n >= 2")
        expected = 1
        for comp in self.components:
            if comp.lo != expected:
                raise ValidationError(
                    f"components must tile [1,{self.n}] consecutively; got lo={comp.lo}")
            comp.validate()
            expected = comp.hi + 1
        if expected != self.n + 1:
            raise ValidationError(f"components cover [1,{expected - 1}], not [1,{self.n}]")

    @classmethod
    def from_cliques(cls, n: int, cliques: Iterable[Iterable[int]]) -> "ClosedGraph":
        """Group a flat clique list into components (split where ``a_{i+1} > b_i``)."""
        cl = sorted((int(a), int(b)) for a, b in cliques)
        if not cl:
            raise ValidationError("no cliques given")
        comps: list[list[Interval]] = [[cl[0]]]
        for a, b in cl[1:]:
            prev_b = comps[-1][-1][1]
            if a > prev_b:
                comps.append([(a, b)])
            else:
                comps[-1].append((a, b))
        return cls(n, tuple(CliqueComponent(c[0][0], c[-1][1], tuple(c)) for c in comps))

    @classmethod
    def connected(cls, n: int, cliques: Iterable[Iterable[int]]) -> "ClosedGraph":
        cl = tuple((int(a), int(b)) for a, b in cliques)
        return cls(n, (CliqueComponent(1, n, cl),))

    @property
    def cliques(self) -> tuple[Interval, ...]:
        return tuple(c for comp in self.components for c in comp.cliques)

    @property
    def r(self) -> int:
        return len(self.cliques)

    @property
    def c(self) -> int:
        return len(self.components)

    def is_connected(self) -> bool:
        return self.c == 1

    def flat_key(self) -> tuple[int, ...]:
        return tuple(x for ab in self.cliques for x in ab)

    def component_graphs(self) -> list["ClosedGraph"]:
        """Each component relabelled to live on ``[1, n_i]``."""
        return [ClosedGraph(comp.size, (comp.shifted(1 - comp.lo),))
                for comp in self.components]

    def killed_variables(self) -> list[int]:
        """``x_1``, ``x_{n+1}`` and the first vertex of every later component."""
        return [1, self.n + 1] + [comp.lo for comp in self.components[1:]]

    def surviving_variables(self) -> list[int]:
        killed = set(self.killed_variables())
        return [k for k in range(1, self.n + 2) if k not in killed]

    def blocks(self) -> list[Interval]:
        return [blk for comp in self.components for blk in comp.blocks()]

    def edge_count(self) -> int:
        return len(edges_from_cliques(self).edges)

    def to_json(self) -> dict:
        return {"n": self.n, "cliques": [list(c) for c in self.cliques]}

    def __str__(self):
        return f"n={self.n} " + " ".join(f"[{a},{b}]" for a, b in self.cliques)


@dataclass(frozen=True)
class EdgeList:
    n: int
    edges: frozenset[Interval]

    def __post_init__(self):
        clean = set()
        for e in self.edges:
            i, j = sorted(int(v) for v in e)
            if i == j:
                raise ValidationError(f"loop at vertex {i}")
            if not (1 <= i < j <= self.n):
                raise ValidationError(f"edge {{{i},{j}}} outside [1,{self.n}]")
            clean.add((i, j))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def of(cls, n: int, edges: Iterable[Iterable[int]]) -> "EdgeList":
        return cls(n, frozenset(tuple(e) for e in edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}


def is_closed(e: EdgeList) -> bool:
    """Every edge {i,k} forces {i,j} and {j,k} for all i < j < k."""
    edges = e.edges
    for i, k in edges:
        for j in range(i + 1, k):
            if (i, j) not in edges or (j, k) not in edges:
                return False
    return True


def edges_from_cliques(g: ClosedGraph) -> EdgeList:
    edges = set()
    for a, b in g.cliques:
        edges.update(itertools.combinations(range(a, b + 1), 2))
    return EdgeList(g.n, frozenset(edges))


def cliques_from_edges(e: EdgeList) -> ClosedGraph:
    if not is_closed(e):
        raise NotClosedError("edge set is not closed in the given labeling")
    n = e.n
    reach = [0] * (n + 1)  # reach[i]: largest neighbour above i, or i itself
    covered = set()
    for i, j in e.edges:
        reach[i] = max(reach[i], j)
        covered.update((i, j))
    missing = sorted(set(range(1, n + 1)) - covered)
    if missing:
        raise IsolatedVertexError(f"isolated vertices {missing}")
    for i in range(1, n + 1):
        reach[i] = max(reach[i], i)
    # for a closed labeling N+[i] above i is the interval [i, reach[i]];
    # maximal cliques are the intervals not contained in a predecessor's
    cliques: list[Interval] = []
    best = 0
    for i in range(1, n + 1):
        if reach[i] > best and reach[i] > i:
            cliques.append((i, reach[i]))
        best = max(best, reach[i])
    comps: list[list[Interval]] = [[cliques[0]]]
    for a, b in cliques[1:]:
        if a > comps[-1][-1][1]:
            comps.append([(a, b)])
        else:
            comps[-1].append((a, b))
    expected = 1
    for comp in comps:
        if comp[0][0] != expected:
            raise InterleavedComponentsError("components are not consecutive intervals")
        expected = comp[-1][1] + 1
    return ClosedGraph(n, tuple(CliqueComponent(c[0][0], c[-1][1], tuple(c)) for c in comps))


# --- enumeration ------------------------------------------------------------

def _interval_chains(lo: int, hi: int) -> Iterator[tuple[Interval, ...]]:
    """Strictly increasing connected interval chains from ``lo`` to ``hi``."""
    def extend(chain: list[Interval]):
        a, b = chain[-1]
        if b == hi:
            yield tuple(chain)
            return
        for a2 in range(a + 1, b + 1):
            for b2 in range(b + 1, hi + 1):
                chain.append((a2, b2))
                yield from extend(chain)
                chain.pop()

    for b1 in range(lo + 1, hi + 1):
        yield from extend([(lo, b1)])


def enumerate_connected(n: int) -> Iterator[ClosedGraph]:
    """Every connected closed graph on ``[1, n]``, lexicographic in (a_i, b_i)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    chains = sorted(_interval_chains(1, n), key=lambda ch: tuple(x for ab in ch for x in ab))
    for ch in chains:
        yield ClosedGraph(n, (CliqueComponent(1, n, ch),))


def _compositions(n: int, min_part: int = 2) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min_part, n + 1):
        for rest in _compositions(n - first, min_part):
            yield (first,) + rest


def enumerate_all(n: int) -> Iterator[ClosedGraph]:
    """All closed graphs on ``[1, n]`` without isolated vertices."""
    if n < 2:
        raise ValueError("n must be at least 2")
    out = []
    for parts in _compositions(n):
        per_part = []
        lo = 1
        for size in parts:
            per_part.append([CliqueComponent(lo, lo + size - 1, ch)
                             for ch in _interval_chains(lo, lo + size - 1)])
            lo += size
        for combo in itertools.product(*per_part):
            out.append(ClosedGraph(n, tuple(combo)))
    out.sort(key=ClosedGraph.flat_key)
    yield from out


def enumerate_range(n_max: int, connected_only: bool = False, n_min: int = 2
                    ) -> Iterator[ClosedGraph]:
    gen = enumerate_connected if connected_only else enumerate_all
    for n in range(n_min, n_max + 1):
        yield from gen(n)


def brute_force_closed_count(n: int, connected_only: bool) -> int:
    """Count labeled graphs on [n] that are closed in the identity labeling.

    Without ``connected_only`` graphs with isolated vertices are excluded,
    matching :func:`enumerate_all`.
    """
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    count = 0
    for mask in range(1 << len(pairs)):
        edges = frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)
        e = EdgeList(n, edges)
        if not is_closed(e):
            continue
        if connected_only:
            if _is_connected(n, edges):
                count += 1
        elif all(any(v in p for p in edges) for v in range(1, n + 1)):
            count += 1
    return count


def _is_connected(n: int, edges) -> bool:
    adj = {v: set() for v in range(1, n + 1)}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == n


def random_closed(n: int, seed: int | None = None) -> ClosedGraph:
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = random.Random(seed)
    sizes = []
    left = n
    while left:
        if left <= 3:
            size = left
        else:
            size = rng.randint(2, left) if rng.random() < 0.5 else left
            if left - size == 1:
                size = left
        sizes.append(size)
        left -= size
    comps = []
    lo = 1
    for size in sizes:
        hi = lo + size - 1
        chain = [(lo, rng.randint(lo + 1, hi))]
        while chain[-1][1] < hi:
            a, b = chain[-1]
            chain.append((rng.randint(a + 1, b), rng.randint(b + 1, hi)))
        comps.append(CliqueComponent(lo, hi, tuple(chain)))
        lo = hi + 1
    return ClosedGraph(n, tuple(comps))


# --- JSON ---------------------------------------------------------------------

def graph_from_json(data: dict | str) -> ClosedGraph:
    """Parse ``{"n":..., "cliques": [...]}`` or ``{"n":..., "edges": [...]}``."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "n" not in data:
        raise ValueError("graph JSON must be an object with an 'n' field")
    has_c, has_e = "cliques" in data, "edges" in data
    if has_c == has_e:
        raise ValueError("graph JSON needs exactly one of 'cliques' or 'edges'")
    n = int(data["n"])
    if has_c:
        return ClosedGraph.from_cliques(n, data["cliques"])
    return cliques_from_edges(EdgeList.of(n, data["edges"]))


def triple_intersection_empty(g: ClosedGraph, i: int) -> bool:
    """Cliques i, i+1, i+2 share no vertex, by direct set intersection (1-based ``i``, global)."""
    cl = g.cliques
    sets = [set(range(a, b + 1)) for a, b in cl[i - 1:i + 2]]
    return not (sets[0] & sets[1] & sets[2])
