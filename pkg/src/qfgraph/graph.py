"""q-factorization graphs: construction, shape classification, dualities.

Vertices are KR factors; there is an arrow (v, w) labeled by the exponent
gap whenever that gap is positive and lies in the reducibility set of the
two factors over the whole diagram.  Arrows always point from the higher
exponent to the lower one, so the graph is automatically acyclic and the
label along any path equals the exponent difference of its endpoints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .dynkin import DynkinA
from .drinfeld import KRFactor, expand_all, is_dissociate, q_factorize
from .redsets import r_set

SINGLETON = "singleton"
TWO_LINE = "two_line"
MONOTONIC_LINE3 = "monotonic_line3"
ALTERNATING_LINE3 = "alternating_line3"
TRIANGLE = "triangle"
TOTALLY_ORDERED = "totally_ordered"
TREE = "tree"
DISCONNECTED = "disconnected"
OTHER = "other"


@dataclass(frozen=True)
class Arrow:
    tail: int
    head: int
    epsilon: int


@dataclass(frozen=True)
class ShapeClass:
    """Shape tag plus the supporting component / line data."""

    tag: str
    components: tuple[tuple[int, ...], ...]
    line_order: tuple[int, ...] | None = None

    @property
    def component_count(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class QFactGraph:
    diagram: DynkinA
    vertices: tuple[KRFactor, ...]
    arrows: tuple[Arrow, ...]
    was_refactorized: bool = False
    _arrow_map: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_arrow_map",
                           {(a.tail, a.head): a.epsilon for a in self.arrows})

    # -- basic queries ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def arrow_between(self, tail: int, head: int) -> int | None:
        return self._arrow_map.get((tail, head))

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self._arrow_map or (v, u) in self._arrow_map

    def out_neighbors(self, v: int) -> list[int]:
        return [a.head for a in self.arrows if a.tail == v]

    def in_neighbors(self, v: int) -> list[int]:
        return [a.tail for a in self.arrows if a.head == v]

    def undirected_neighbors(self, v: int) -> list[int]:
        return sorted(set(self.out_neighbors(v)) | set(self.in_neighbors(v)))

    def undirected_edges(self) -> set[frozenset]:
        return {frozenset((a.tail, a.head)) for a in self.arrows}

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Weakly connected components as sorted vertex-id tuples."""
        seen: set[int] = set()
        comps = []
        for start in range(len(self.vertices)):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.undirected_neighbors(v):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.undirected_edges()) == len(self) - 1

    def boundary_vertices(self) -> tuple[int, ...]:
        """Vertices of undirected degree at most one."""
        return tuple(v for v in range(len(self.vertices))
                     if len(self.undirected_neighbors(v)) <= 1)

    def is_totally_ordered(self) -> bool:
        """All vertex pairs comparable in the arrow-generated partial order."""
        n = len(self.vertices)
        reach = [set() for _ in range(n)]
        for v in range(n):
            stack = [v]
            while stack:
                u = stack.pop()
                for w in self.out_neighbors(u):
                    if w not in reach[v]:
                        reach[v].add(w)
                        stack.append(w)
        return all(v in reach[u] or u in reach[v]
                   for u in range(n) for v in range(u + 1, n))

    # -- construction and transforms ----------------------------------------

    def induced(self, ids) -> "QFactGraph":
        """Induced subgraph on the given vertex ids (rebuilt, so re-sorted)."""
        return build_graph([self.vertices[v] for v in ids], self.diagram)

    def connected_subgraphs(self, size: int) -> list["QFactGraph"]:
        """All weakly connected induced subgraphs on `size` vertices."""
        out = []
        for ids in itertools.combinations(range(len(self.vertices)), size):
            chosen = set(ids)
            stack, seen = [ids[0]], {ids[0]}
            while stack:
                v = stack.pop()
                for w in self.undirected_neighbors(v):
                    if w in chosen and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == len(ids):
                out.append(self.induced(ids))
        return out

    def arrow_dual(self) -> "QFactGraph":
        """Reverse every arrow by negating all exponents."""
        flipped = [KRFactor(v.color, -v.exponent, v.weight) for v in self.vertices]
        g = build_graph(flipped, self.diagram)
        assert not g.was_refactorized
        return g

    def color_dual(self) -> "QFactGraph":
        """Apply the diagram automorphism and the dual exponent shift."""
        n = self.diagram.n
        mapped = [KRFactor(n + 1 - v.color, v.exponent - (n + 1), v.weight)
                  for v in self.vertices]
        g = build_graph(mapped, self.diagram)
        assert not g.was_refactorized
        return g

    def translate(self, shift: int) -> "QFactGraph":
        moved = [KRFactor(v.color, v.exponent + shift, v.weight) for v in self.vertices]
        return build_graph(moved, self.diagram)

    def canonical_key(self) -> tuple:
        """Hashable key invariant under global exponent translation."""
        if not self.vertices:
            return (self.diagram.n, (), ())
        base = min(v.exponent for v in self.vertices)
        verts = tuple((v.color, v.exponent - base, v.weight) for v in self.vertices)
        arrows = tuple(sorted((a.tail, a.head, a.epsilon) for a in self.arrows))
        return (self.diagram.n, verts, arrows)

    def same_up_to_shift(self, other: "QFactGraph") -> bool:
        return self.canonical_key() == other.canonical_key()

    def to_dot(self) -> str:
        lines = ["digraph qfactorization {", "  rankdir=LR;"]
        for idx, v in enumerate(self.vertices):
            lines.append(f'  v{idx} [label="{v.label()}"];')
        for a in sorted(self.arrows, key=lambda a: (a.tail, a.head)):
            lines.append(f'  v{a.tail} -> v{a.head} [label="{a.epsilon}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(factors, diagram: DynkinA) -> QFactGraph:
    """Build the q-factorization graph of the given multiset of factors.

    Inputs that are only a pre-factorization (some same-color pair coalesces)
    are normalized through q_factorize first and flagged in the result.
    """
    factors = list(factors)
    for f in factors:
        diagram.check_node(f.color)
    refactorized = False
    if not is_dissociate(factors):
        factors = list(q_factorize(expand_all(factors)))
        refactorized = True
    vertices = tuple(sorted(factors))
    arrows = []
    for t, u in enumerate(vertices):
        for h, v in enumerate(vertices):
            if t == h:
                continue
            gap = u.exponent - v.exponent
            if gap <= 0:
                continue
            if r_set(diagram, u.color, u.weight, v.color, v.weight).contains_signed(gap):
                arrows.append(Arrow(t, h, gap))
    return QFactGraph(diagram, vertices, tuple(arrows), refactorized)


def classify(g: QFactGraph) -> ShapeClass:
    """Shape tag of the graph, finest applicable tag first."""
    if not g.vertices:
        raise ValueError("cannot classify an empty graph")
    comps = g.components()
    if len(comps) > 1:
        return ShapeClass(DISCONNECTED, comps)
    n = len(g.vertices)
    if n == 1:
        return ShapeClass(SINGLETON, comps)
    if n == 2:
        return ShapeClass(TWO_LINE, comps, line_order=_two_line_order(g))
    if n == 3:
        narrows = len(g.arrows)
        if narrows == 3:
            return ShapeClass(TRIANGLE, comps)
        middle = next(v for v in range(3) if len(g.undirected_neighbors(v)) == 2)
        ends = [v for v in range(3) if v != middle]
        if g.arrow_between(middle, ends[0]) is not None and \
           g.arrow_between(middle, ends[1]) is not None:
            return ShapeClass(ALTERNATING_LINE3, comps, (ends[0], middle, ends[1]))
        if g.arrow_between(ends[0], middle) is not None and \
           g.arrow_between(ends[1], middle) is not None:
            return ShapeClass(ALTERNATING_LINE3, comps, (ends[0], middle, ends[1]))
        order = _monotonic_order3(g, middle, ends)
        return ShapeClass(MONOTONIC_LINE3, comps, order)
    if g.is_totally_ordered():
        return ShapeClass(TOTALLY_ORDERED, comps)
    if g.is_tree():
        return ShapeClass(TREE, comps)
    return ShapeClass(OTHER, comps)


def _two_line_order(g: QFactGraph) -> tuple[int, ...]:
    a = g.arrows[0]
    return (a.tail, a.head)


def _monotonic_order3(g: QFactGraph, middle: int, ends) -> tuple[int, ...]:
    if g.arrow_between(ends[0], middle) is not None:
        return (ends[0], middle, ends[1])
    return (ends[1], middle, ends[0])
