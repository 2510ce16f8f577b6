"""Generalized Cayley subsets, the graphs they define, and cycle censuses.

``GC(G, S, alpha)`` has vertex set G and an edge ``{x, y}`` whenever
``alpha(x^-1) y`` lies in S, i.e. the neighbours of ``x`` are ``alpha(x) s``
for ``s`` in S.  For valency at most two the multiset of component sizes
(the cycle census) is a complete isomorphism invariant.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .autgroup import Automorphism, identity_automorphism

MATERIALIZE_CAP = 10**5


class SubsetError(ValueError):
    condition = 0


class NotInvolutoryAutomorphism(SubsetError):
    condition = 1


class LoopCondition(SubsetError):
    condition = 2


class NotUndirected(SubsetError):
    condition = 3


class EmptySubset(SubsetError):
    pass


class GraphTooLarge(RuntimeError):
    pass


class ValencyOutOfScope(ValueError):
    pass


@dataclass(frozen=True)
class GcSubset:
    alpha: Automorphism
    members: tuple

    @property
    def group(self):
        return self.alpha.group

    def __len__(self):
        return len(self.members)

    def describe(self) -> str:
        return "{" + ", ".join(self.group.cycles(s) for s in self.members) + "}"


def validate_subset(alpha: Automorphism, members: Iterable[int]) -> GcSubset:
    g = alpha.group
    S = np.unique(np.asarray(list(members), dtype=np.int64))
    if S.size == 0:
        raise EmptySubset("S is empty")
    if not alpha.is_involutory():
        raise NotInvolutoryAutomorphism("alpha^2 != 1")
    # alpha(x) x^-1 = s  <=>  alpha(x) = s x, so s lies in omega iff some x solves it
    omega_hit = [int(s) for s in S if np.any(alpha.table == g.mul(s, g.all))]
    if omega_hit:
        raise LoopCondition(f"S meets omega_alpha(G): {g.cycles(omega_hit[0])}")
    if not np.array_equal(np.sort(alpha(S)), np.sort(g.inv[S])):
        raise NotUndirected("alpha(S) != S^-1")
    return GcSubset(alpha, tuple(int(s) for s in S))


class GcGraph:
    """Implicit graph; edges are produced on demand."""

    def __init__(self, subset: GcSubset):
        self.subset = subset
        self.group = subset.group
        self.valency = len(subset)

    @property
    def order(self) -> int:
        return self.group.order

    def neighbours(self, v) -> np.ndarray:
        g = self.group
        av = self.subset.alpha(v)
        return np.stack([g.mul(av, s) for s in self.subset.members], axis=-1)

    def edges(self) -> np.ndarray:
        """Edges ``(u, v)`` with ``u < v``, each once, sorted."""
        v = self.group.all
        nb = self.neighbours(v)
        u = np.repeat(v, nb.shape[1])
        w = nb.ravel()
        lo, hi = np.minimum(u, w), np.maximum(u, w)
        return np.unique(np.stack([lo, hi], axis=1), axis=0)


def build_graph(subset: GcSubset, cap: int = MATERIALIZE_CAP) -> GcGraph:
    if subset.group.order > cap:
        raise GraphTooLarge(f"|G| = {subset.group.order} exceeds the materialization cap {cap}; "
                            "use census_fast")
    graph = GcGraph(subset)
    graph.edge_list = graph.edges()
    return graph


@dataclass(frozen=True)
class CycleCensus:
    valency: int
    counts: tuple  # ((length, count), ...) ascending; length 2 means K2

    @classmethod
    def from_lengths(cls, valency: int, lengths) -> CycleCensus:
        ls, cs = np.unique(np.asarray(lengths, dtype=np.int64), return_counts=True)
        return cls(valency, tuple((int(a), int(b)) for a, b in zip(ls, cs)))

    @classmethod
    def k2(cls, n: int) -> CycleCensus:
        return cls(1, ((2, int(n)),))

    @property
    def vertices(self) -> int:
        return sum(l * c for l, c in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def to_json(self) -> dict:
        if self.valency == 1:
            return {"k2": self.counts[0][1]}
        return {"cycles": {str(l): c for l, c in self.counts}}

    def __str__(self):
        if self.valency == 1:
            return f"{self.counts[0][1]}K2"
        return " u ".join(f"{c}C{l}" for l, c in self.counts)


def cycle_census(graph: GcGraph) -> CycleCensus:
    """Census from the explicit edge list via connected components."""
    if graph.valency > 2:
        raise ValencyOutOfScope("cycle census needs valency <= 2")
    edges = getattr(graph, "edge_list", None)
    if edges is None:
        edges = graph.edges()
    n = graph.order
    adj = coo_matrix((np.ones(len(edges)), (edges[:, 0], edges[:, 1])), shape=(n, n))
    _, labels = connected_components(adj, directed=False)
    sizes = np.bincount(labels)
    if graph.valency == 1:
        if (sizes != 2).any():
            raise RuntimeError("valency-1 graph with a component that is not K2")
        return CycleCensus.k2(sizes.size)
    return CycleCensus.from_lengths(2, sizes)


def _cyclic_subgroup(group, c: int) -> np.ndarray:
    out = [0]
    cur = int(c)
    while cur != 0:
        out.append(cur)
        cur = int(group.mul(cur, c))
    return np.asarray(out, dtype=np.int64)


def census_fast(alpha: Automorphism, a: int) -> CycleCensus:
    """Census of ``GC(G, {a, alpha(a^-1)}, alpha)`` without building edges.

    With ``P(v) = alpha(v) a`` the two neighbours of ``v`` are ``P(v)`` and
    ``P^-1(v)``, so components are the cycles of P.  ``P^2`` is right
    multiplication by ``c = alpha(a) a`` and P commutes with it, so each
    P-cycle is either one coset ``v<c>`` (when ``v^-1 P(v)`` lies in ``<c>``)
    or the union of two such cosets.
    """
    g = alpha.group
    a = int(a)
    b = int(alpha(g.inv[a]))
    subset = validate_subset(alpha, {a, b})
    if len(subset) == 1:
        return CycleCensus.k2(g.order // 2)
    c = g.mul(alpha(a), a)
    cyc = _cyclic_subgroup(g, c)
    k = cyc.size
    member = np.zeros(g.order, dtype=bool)
    member[cyc] = True
    v = g.all
    d = g.mul(g.mul(g.inv[v], alpha.table), a)
    short = int(member[d].sum())
    counts = {}
    if short:
        counts[k] = short // k
    if g.order - short:
        counts[2 * k] = (g.order - short) // (2 * k)
    return CycleCensus(2, tuple(sorted(counts.items())))


def census(subset: GcSubset) -> CycleCensus:
    """Census of any valid subset of size at most 2, using the cheapest exact route."""
    g = subset.group
    alpha = subset.alpha
    if len(subset) == 1:
        return CycleCensus.k2(g.order // 2)
    if len(subset) != 2:
        raise ValencyOutOfScope("cycle census needs valency <= 2")
    a, b = subset.members
    if int(alpha(g.inv[a])) == b:
        return census_fast(alpha, a)
    # both members are alpha-inverted: the graph is the union of the two perfect
    # matchings v <-> alpha(v) s, whose product is right multiplication by a^-1 b
    n = g.order_of(int(g.mul(g.inv[a], b)))
    return CycleCensus(2, ((2 * n, g.order // (2 * n)),))


def cayley_graph(group, members) -> GcGraph:
    return GcGraph(validate_subset(identity_automorphism(group), members))


def cayley_reduction_check(alpha: Automorphism, a: int, b: int) -> bool:
    """Compare the census of ``GC(G, {a, b}, alpha)`` with ``Cay(G, {a^-1 b, b^-1 a})``.

    Both ``a`` and ``b`` must be inverted by ``alpha``.
    """
    g = alpha.group
    a, b = int(a), int(b)
    if a == b:
        raise ValueError("a and b must differ")
    if int(alpha(g.inv[a])) != a or int(alpha(g.inv[b])) != b:
        raise ValueError("a and b must satisfy alpha(s^-1) = s")
    gc = build_graph(validate_subset(alpha, (a, b)))
    t = int(g.mul(g.inv[a], b))
    cay = build_graph(validate_subset(identity_automorphism(g), (t, int(g.inv[t]))))
    return cycle_census(gc) == cycle_census(cay)
