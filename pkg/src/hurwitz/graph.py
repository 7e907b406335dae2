"""Weighted graph invariant of a factorization.

Each transposition factor ``(a, b)`` contributes one unit of weight to the
edge ``{a, b}``.  The invariant records, per connected component that carries
at least one edge, the component's vertex set together with its total edge
weight; isolated vertices are dropped.  Identity factors are counted
separately.  Elementary moves replace a factor by a conjugate under another
factor, which permutes edges within a component without changing component
membership or total weight, so the whole record is move-invariant.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .factorization import Factorization


@dataclass(frozen=True)
class FactorizationGraph:
    """Multigraph on the points ``1..degree`` collected from the factors.

    ``edges`` maps each present edge ``(a, b)`` with ``a < b`` to its
    multiplicity.  Stored as a sorted tuple of ``((a, b), weight)`` pairs so
    instances hash and compare by value.
    """

    degree: int
    edges: tuple[tuple[tuple[int, int], int], ...]
    identity_factor_count: int

    def edge_weight(self, a: int, b: int) -> int:
        if a > b:
            a, b = b, a
        for edge, weight in self.edges:
            if edge == (a, b):
                return weight
        return 0

    def total_weight(self) -> int:
        return sum(weight for _, weight in self.edges)


@dataclass(frozen=True)
class ComponentSignature:
    """The complete equivalence invariant.

    ``components`` holds one ``(vertices, weight)`` entry per edge-bearing
    connected component, sorted by smallest vertex; ``vertices`` is a sorted
    tuple.  Two identity factorizations of the same degree and length are
    connected by elementary moves exactly when their signatures coincide.
    """

    degree: int
    total_factors: int
    identity_factor_count: int
    components: tuple[tuple[tuple[int, ...], int], ...]

    def __str__(self) -> str:
        return format_signature(self)


def build_graph(factorization: Factorization) -> FactorizationGraph:
    """Collect edge multiplicities and the identity-factor count."""
    counts = Counter(factorization.factors)
    identity = counts.pop(None, 0)
    return FactorizationGraph(
        degree=factorization.degree,
        edges=tuple(sorted(counts.items())),
        identity_factor_count=identity,
    )


def signature(factorization: Factorization) -> ComponentSignature:
    """Compute the component signature of a factorization.

    Runs in near-linear time: one counting pass over the factors, then
    union-find over the distinct edges (path halving, union by size).
    """
    counts = Counter(factorization.factors)
    identity = counts.pop(None, 0)

    # Union-find over 1..degree, parent[0] unused.
    parent = list(range(factorization.degree + 1))
    size = [1] * (factorization.degree + 1)
    for a, b in counts:
        # find with path halving, inlined for speed
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a == b:
            continue
        if size[a] < size[b]:
            a, b = b, a
        parent[b] = a
        size[a] += size[b]

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    weights: dict[int, int] = {}
    members: dict[int, list[int]] = {}
    for (a, b), w in counts.items():
        root = find(a)
        weights[root] = weights.get(root, 0) + w
    for v in range(1, factorization.degree + 1):
        root = find(v)
        if root in weights:
            members.setdefault(root, []).append(v)

    components = sorted(
        (tuple(members[root]), weights[root]) for root in weights
    )
    return ComponentSignature(
        degree=factorization.degree,
        total_factors=len(factorization.factors),
        identity_factor_count=identity,
        components=tuple(components),
    )


def format_signature(sig: ComponentSignature) -> str:
    """Render the text form, e.g. ``n=6; m=8; e=0; [{1,4,5}:4,{2,3,6}:4]``.

    >>> from .factorization import parse_factorization
    >>> f = parse_factorization("n=3; [(1,2),(1,2)]")
    >>> format_signature(signature(f))
    'n=3; m=2; e=0; [{1,2}:2]'
    """
    parts = [
        "{" + ",".join(str(v) for v in vertices) + "}:" + str(weight)
        for vertices, weight in sig.components
    ]
    return (
        f"n={sig.degree}; m={sig.total_factors}; "
        f"e={sig.identity_factor_count}; [{','.join(parts)}]"
    )


def to_dot(factorization: Factorization) -> str:
    """Render the graph in DOT form with deterministic ordering.

    Vertices appear in ascending order, then edges sorted by endpoint pair,
    each labeled with its weight.
    """
    graph = build_graph(factorization)
    lines = ["graph factorization {"]
    for v in range(1, graph.degree + 1):
        lines.append(f"  {v};")
    for (a, b), weight in graph.edges:
        lines.append(f'  {a} -- {b} [label="w={weight}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
