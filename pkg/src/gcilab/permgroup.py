"""Permutation arithmetic, stabilizer chains and indexed finite groups.

Conventions used everywhere in the package:

* points are 0-based internally; cycle notation read and written by the
  package is 1-based, as in the usual printed form ``(1 2)(3 4)``;
* ``compose(p, q)`` (also ``p * q``) means "apply p, then q";
* conjugation is ``a^b = b a b^-1``.

A :class:`Group` enumerates its elements once, in the canonical
transversal-product order of its stabilizer chain, and from then on works
with element *indices*.  Index 0 is always the identity.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_CAP = 10**6


class CycleNotationError(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


class CapExceeded(RuntimeError):
    """Raised when a group is too large for the requested mode."""


class NotInGroup(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection on 0..{len(self.images) - 1}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_array(cls, arr) -> Permutation:
        return cls(tuple(int(v) for v in arr))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 0-based, each starting at its smallest point."""
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def to_cycles(self) -> str:
        """1-based cycle notation; the identity prints as ``()``."""
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyc)

    def __str__(self):
        return self.to_cycles()

    def as_array(self) -> np.ndarray:
        return np.asarray(self.images, dtype=np.int64)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation such as ``"(1 2)(3 4 5)"``.

    Cycles are multiplied left to right; points that do not occur are
    fixed.  Points may be separated by blanks or commas.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    stripped = text.strip()
    pos = 0
    result = list(range(degree))
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(stripped, pos)
        if m is None:
            raise CycleNotationError(f"malformed cycle notation at {stripped[pos:]!r}")
        tokens = [t for t in re.split(r"[\s,]+", m.group(1).strip()) if t]
        points = []
        for tok in tokens:
            if not tok.isdigit():
                raise CycleNotationError(f"malformed token {tok!r} in {text!r}")
            p = int(tok)
            if not 1 <= p <= degree:
                raise CycleNotationError(f"point {p} out of range 1..{degree}")
            points.append(p - 1)
        if len(set(points)) != len(points):
            raise CycleNotationError(f"repeated point in cycle {m.group(0)!r}")
        if len(points) > 1:
            cyc = list(range(degree))
            for a, b in zip(points, points[1:] + points[:1]):
                cyc[a] = b
            result = [cyc[v] for v in result]
        pos = m.end()
    return Permutation(tuple(result))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation "apply p, then q"."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees differ: {p.degree} != {q.degree}")
    qi = q.images
    return Permutation(tuple(qi[v] for v in p.images))


def element_order(p: Permutation) -> int:
    return math.lcm(*(len(c) for c in p.cycles())) if p.cycles() else 1


# ---------------------------------------------------------------------------
# Stabilizer chains.  Internally permutations are numpy int arrays, so the
# same code serves small-degree groups and automorphism groups acting on an
# element index space of size |G|.


def _is_identity(arr: np.ndarray) -> bool:
    return bool(np.array_equal(arr, np.arange(arr.shape[0])))


def _inverse(arr: np.ndarray) -> np.ndarray:
    inv = np.empty_like(arr)
    inv[arr] = np.arange(arr.shape[0], dtype=arr.dtype)
    return inv


@dataclass
class ChainLevel:
    base_point: int
    degree: int
    gens: list[np.ndarray] = field(default_factory=list)
    inv_gens: list[np.ndarray] = field(default_factory=list)
    orbit: np.ndarray = None
    position: np.ndarray = None  # point -> position in orbit, -1 outside
    parent: np.ndarray = None  # orbit point -> predecessor point
    label: np.ndarray = None  # orbit point -> generator index
    explicit: bool = True
    _transversal: np.ndarray | None = None

    def add_gen(self, g: np.ndarray):
        self.gens.append(g)
        self.inv_gens.append(_inverse(g))

    def rebuild(self):
        """Breadth-first Schreier vector; orbit order is discovery order."""
        n = self.degree
        position = np.full(n, -1, dtype=np.int64)
        parent = np.full(n, -1, dtype=np.int64)
        label = np.full(n, -1, dtype=np.int64)
        b = self.base_point
        position[b] = 0
        orbit = [np.array([b], dtype=np.int64)]
        frontier = orbit[0]
        count = 1
        while frontier.size:
            nxt = []
            for k, g in enumerate(self.gens):
                img = g[frontier]
                fresh = position[img] < 0
                if not fresh.any():
                    continue
                img_f, first = np.unique(img[fresh], return_index=True)
                src = frontier[fresh][first]
                # keep discovery order deterministic: sort by source position
                order = np.lexsort((img_f, position[src]))
                img_f, src = img_f[order], src[order]
                still = position[img_f] < 0
                img_f, src = img_f[still], src[still]
                position[img_f] = np.arange(count, count + img_f.size)
                parent[img_f] = src
                label[img_f] = k
                count += img_f.size
                nxt.append(img_f)
            frontier = np.concatenate(nxt) if nxt else np.empty(0, dtype=np.int64)
            if frontier.size:
                orbit.append(frontier)
        orb = np.concatenate(orbit)
        orb = orb[np.argsort(position[orb])]
        self.orbit, self.position, self.parent, self.label = orb, position, parent, label
        self._transversal = None
        if self.explicit:
            self._build_transversal()

    def _build_transversal(self):
        n = self.degree
        trans = np.empty((self.orbit.size, n), dtype=np.int64)
        trans[0] = np.arange(n)
        for i in range(1, self.orbit.size):
            beta = self.orbit[i]
            par = self.parent[beta]
            g = self.gens[self.label[beta]]
            trans[i] = g[trans[self.position[par]]]
        self._transversal = trans

    def transversal(self, beta: int) -> np.ndarray:
        """Element mapping the base point to ``beta``."""
        if self._transversal is not None:
            return self._transversal[self.position[beta]]
        word = []
        while beta != self.base_point:
            word.append(self.label[beta])
            beta = self.parent[beta]
        u = np.arange(self.degree)
        for k in reversed(word):
            u = self.gens[k][u]
        return u

    def transversals(self) -> np.ndarray:
        if self._transversal is None:
            self._build_transversal()
        return self._transversal

    def strip(self, g: np.ndarray) -> np.ndarray | None:
        """Divide ``g`` by the transversal element of its base image; None if outside the orbit."""
        beta = int(g[self.base_point])
        if self.position[beta] < 0:
            return None
        if self._transversal is not None:
            u = self._transversal[self.position[beta]]
            return _inverse(u)[g]
        while beta != self.base_point:
            g = self.inv_gens[self.label[beta]][g]
            beta = int(self.parent[beta])
        return g


class StabilizerChain:
    """Base and strong generating set for a permutation group.

    Built by Schreier-Sims.  Base points are chosen as the smallest point
    moved by the element that forces a new level, which makes the chain,
    the orbit orders and hence the element enumeration deterministic.
    """

    EXPLICIT_DEGREE = 2048

    def __init__(self, generators: Sequence[np.ndarray], degree: int):
        self.degree = degree
        self.generators = [np.asarray(g, dtype=np.int64) for g in generators]
        self.levels: list[ChainLevel] = []

    @property
    def base(self) -> list[int]:
        return [lvl.base_point for lvl in self.levels]

    @property
    def order(self) -> int:
        return math.prod(int(lvl.orbit.size) for lvl in self.levels)

    @property
    def orbit_sizes(self) -> list[int]:
        return [int(lvl.orbit.size) for lvl in self.levels]

    def _new_level(self, h: np.ndarray) -> ChainLevel:
        moved = np.nonzero(h != np.arange(self.degree))[0]
        taken = set(self.base)
        point = next(int(p) for p in moved if int(p) not in taken)
        lvl = ChainLevel(point, self.degree, explicit=self.degree <= self.EXPLICIT_DEGREE)
        self.levels.append(lvl)
        return lvl

    def sift(self, g: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        for i in range(start, len(self.levels)):
            h = self.levels[i].strip(g)
            if h is None:
                return g, i
            g = h
        return g, len(self.levels)

    def _install(self, h: np.ndarray, lo: int, hi: int):
        if hi == len(self.levels):
            self._new_level(h)
        for lvl in self.levels[lo:hi + 1]:
            lvl.add_gen(h)
            lvl.rebuild()

    def _initial(self):
        for g in self.generators:
            if _is_identity(g):
                continue
            if all(g[b] == b for b in self.base):
                self._new_level(g)
        for i, lvl in enumerate(self.levels):
            fixing = self.base[:i]
            for g in self.generators:
                if not _is_identity(g) and all(g[b] == b for b in fixing):
                    lvl.add_gen(g)
            lvl.rebuild()

    def _deterministic(self):
        i = len(self.levels) - 1
        while i >= 0:
            lvl = self.levels[i]
            grew = False
            for beta in lvl.orbit:
                u = lvl.transversal(int(beta))
                for s in list(lvl.gens):
                    image = int(s[beta])
                    sg = _inverse(lvl.transversal(image))[s[u]]
                    if _is_identity(sg):
                        continue
                    h, j = self.sift(sg, i + 1)
                    if j < len(self.levels) or not _is_identity(h):
                        self._install(h, i + 1, j)
                        i = j
                        grew = True
                        break
                if grew:
                    break
            if not grew:
                i -= 1

    def _randomized(self, known_order: int, random_element, max_idle: int):
        idle = 0
        while self.order < known_order:
            g = np.asarray(random_element(), dtype=np.int64)
            h, j = self.sift(g)
            if j < len(self.levels) or not _is_identity(h):
                self._install(h, 0, j)
                idle = 0
            else:
                idle += 1
                if idle > max_idle:
                    raise RuntimeError("randomized Schreier-Sims stalled below the known order")
        if self.order != known_order:
            raise RuntimeError(f"chain order {self.order} exceeds known order {known_order}")


def build_chain(generators: Sequence, degree: int | None = None, *,
                known_order: int | None = None, random_element=None,
                max_idle: int = 200) -> StabilizerChain:
    """Stabilizer chain of the group generated by ``generators``.

    ``generators`` may be :class:`Permutation` objects or integer arrays.
    With ``known_order`` and a uniform ``random_element`` callable the chain
    is built by randomized Schreier-Sims, which is correct once the chain
    order reaches the (independently known) group order.
    """
    arrays = []
    for g in generators:
        arr = g.as_array() if isinstance(g, Permutation) else np.asarray(g, dtype=np.int64)
        arrays.append(arr)
    if not arrays and degree is None:
        raise ValueError("need at least one generator")
    d = degree if degree is not None else arrays[0].shape[0]
    for arr in arrays:
        if arr.shape[0] != d:
            raise DegreeMismatch("generators must share one degree")
    chain = StabilizerChain(arrays, d)
    chain._initial()
    if known_order is not None and random_element is not None:
        chain._randomized(known_order, random_element, max_idle)
    else:
        chain._deterministic()
    return chain


def contains(chain: StabilizerChain, p) -> bool:
    arr = p.as_array() if isinstance(p, Permutation) else np.asarray(p, dtype=np.int64)
    if arr.shape[0] != chain.degree:
        raise DegreeMismatch(f"degree {arr.shape[0]} != chain degree {chain.degree}")
    h, j = chain.sift(arr)
    return j == len(chain.levels) and _is_identity(h)


def _element_table(chain: StabilizerChain, dtype) -> np.ndarray:
    """All elements as rows, in transversal-product order.

    Row ``pos_1 * |G^(1)| + ... `` is ``t_L ... t_2 t_1`` (apply the deepest
    transversal element first), so sifting recovers the positions.
    """
    table = np.arange(chain.degree, dtype=dtype)[None, :]
    for lvl in reversed(chain.levels):
        trans = lvl.transversals().astype(dtype)
        # compose(e, t) = t[e] for every transversal t and every row e
        table = trans[np.arange(trans.shape[0])[:, None, None], table[None, :, :]]
        table = table.reshape(-1, chain.degree)
    return table


def enumerate_elements(chain: StabilizerChain, cap: int = DEFAULT_CAP) -> Iterator[Permutation]:
    if chain.order > cap:
        raise CapExceeded(f"group order {chain.order} exceeds cap {cap}; use extended mode")
    for row in _element_table(chain, np.int64):
        yield Permutation.from_array(row)


# ---------------------------------------------------------------------------


class Group:
    """A finite permutation group with its elements indexed.

    ``elements[i]`` is the image array of element ``i``; products, inverses
    and orders are computed on whole index arrays at once.  An element is
    determined by its base images, which is how indices are looked up.
    """

    def __init__(self, generators: Sequence[Permutation], name: str = "",
                 cap: int = DEFAULT_CAP):
        if not generators:
            raise ValueError("need at least one generator")
        degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise DegreeMismatch("generators must share one degree")
        self.name = name
        self.degree = degree
        self.generators = list(generators)
        self.chain = build_chain(self.generators, degree)
        self.order = self.chain.order
        if self.order > cap:
            raise CapExceeded(f"{name or 'group'} has order {self.order} > cap {cap}; "
                              "use extended mode")
        dtype = np.uint8 if degree <= 255 else np.int32
        self.elements = _element_table(self.chain, dtype)
        self.base = np.asarray(self.chain.base, dtype=np.int64)
        if self.base.size == 0:
            self.base = np.zeros(1, dtype=np.int64)
        self._radix = degree ** np.arange(self.base.size, dtype=np.int64)
        keys = self._keys(self.elements[:, self.base])
        span = degree ** self.base.size
        if span <= 1 << 24:
            self._lut = np.full(span, -1, dtype=np.int64)
            self._lut[keys] = np.arange(self.order)
            self._sorted_keys = None
        else:
            self._lut = None
            order = np.argsort(keys)
            self._sorted_keys = keys[order]
            self._key_order = order
        self._base_images = self.elements[:, self.base].astype(np.int64)
        self.gen_index = [self.index(g) for g in self.generators]
        self.inv = self._lookup(np.argsort(self.elements, axis=1)[:, self.base])
        self._orders = None

    def __repr__(self):
        return f"Group({self.name!r}, order={self.order}, degree={self.degree})"

    def __len__(self):
        return self.order

    def _keys(self, base_images: np.ndarray) -> np.ndarray:
        return (base_images.astype(np.int64) * self._radix).sum(axis=-1)

    def _lookup(self, base_images: np.ndarray) -> np.ndarray:
        keys = self._keys(base_images)
        if self._lut is not None:
            return self._lut[keys]
        pos = np.searchsorted(self._sorted_keys, keys)
        return self._key_order[np.minimum(pos, self.order - 1)]

    # -- conversions -------------------------------------------------------

    def index(self, p: Permutation | str) -> int:
        if isinstance(p, str):
            p = parse_cycles(p, self.degree)
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree {p.degree} != {self.degree}")
        arr = np.asarray(p.images, dtype=np.int64)
        i = int(self._lookup(arr[self.base]))
        if i < 0 or not np.array_equal(self.elements[i].astype(np.int64), arr):
            raise NotInGroup(f"{p} is not an element of {self.name or 'the group'}")
        return i

    def perm(self, i: int) -> Permutation:
        return Permutation.from_array(self.elements[int(i)])

    def cycles(self, i: int) -> str:
        return self.perm(i).to_cycles()

    # -- arithmetic on index arrays ----------------------------------------

    def mul(self, a, b):
        """Index of ``a * b`` (apply a, then b); broadcasts over arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        imgs = self.elements[b[..., None], self._base_images[a]]
        out = self._lookup(imgs)
        return out if out.ndim else int(out)

    def inverse(self, a):
        out = self.inv[np.asarray(a, dtype=np.int64)]
        return out if np.ndim(out) else int(out)

    def conj(self, a, b):
        """``a^b = b a b^-1``."""
        return self.mul(self.mul(b, a), self.inverse(b))

    def power(self, a, k: int):
        a = np.asarray(a, dtype=np.int64)
        if k < 0:
            a, k = self.inv[a], -k
        result = np.zeros_like(a)
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result if np.ndim(result) else int(result)

    @property
    def all(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    @property
    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            orders = np.zeros(self.order, dtype=np.int64)
            orders[0] = 1
            cur = self.all
            k = 1
            while (orders == 0).any():
                k += 1
                cur = self.mul(cur, self.all)
                hit = (cur == 0) & (orders == 0)
                orders[hit] = k
            self._orders = orders
        return self._orders

    def involutions(self) -> np.ndarray:
        sq = self.mul(self.all, self.all)
        return np.nonzero((sq == 0) & (self.all != 0))[0]

    def order_of(self, i: int) -> int:
        return int(self.element_orders[i])


# ---------------------------------------------------------------------------


def orbit_labels(n: int, maps: Iterable[np.ndarray], subset: np.ndarray | None = None) -> np.ndarray:
    """Orbits of the group generated by ``maps`` (arrays on ``0..n-1``).

    Returns labels numbered by the smallest point of each orbit.  With
    ``subset`` the maps must preserve it, and points outside are labelled -1.
    """
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components

    src, dst = [], []
    nodes = np.arange(n) if subset is None else np.asarray(subset)
    for m in maps:
        src.append(nodes)
        dst.append(np.asarray(m)[nodes])
    if src:
        rows = np.concatenate(src)
        cols = np.concatenate(dst)
    else:
        rows = cols = np.empty(0, dtype=np.int64)
    graph = coo_matrix((np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(n, n))
    _, raw = connected_components(graph, directed=True, connection="weak")
    first = np.full(raw.max() + 1, n, dtype=np.int64)
    np.minimum.at(first, raw[nodes], nodes)
    used = np.nonzero(first < n)[0]
    rank = np.full(raw.max() + 1, -1, dtype=np.int64)
    rank[used[np.argsort(first[used])]] = np.arange(used.size)
    labels = rank[raw]
    if subset is not None:
        out = np.full(n, -1, dtype=np.int64)
        out[nodes] = labels[nodes]
        return out
    return labels


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    size: int
    element_order: int


@dataclass
class ConjugacyClassTable:
    classes: list[ConjugacyClass]
    class_of: np.ndarray

    def count(self, order: int) -> int:
        """Number of classes of elements of the given order (``C_G(n)``)."""
        return sum(1 for c in self.classes if c.element_order == order)

    def __len__(self):
        return len(self.classes)


def conjugation_maps(group: Group) -> list[np.ndarray]:
    return [group.conj(group.all, s) for s in group.gen_index]


def conjugacy_classes(group: Group) -> ConjugacyClassTable:
    labels = orbit_labels(group.order, conjugation_maps(group))
    sizes = np.bincount(labels)
    reps = np.full(sizes.size, group.order, dtype=np.int64)
    np.minimum.at(reps, labels, group.all)
    orders = group.element_orders
    classes = [ConjugacyClass(int(r), int(s), int(orders[r])) for r, s in zip(reps, sizes)]
    # classes are labelled by smallest member; list them by (order, representative)
    perm = sorted(range(len(classes)), key=lambda k: (classes[k].element_order, classes[k].representative))
    remap = np.empty(len(classes), dtype=np.int64)
    remap[perm] = np.arange(len(classes))
    return ConjugacyClassTable([classes[k] for k in perm], remap[labels])


def involution_class_count(group: Group) -> int:
    """``C_G(2)`` without building the full class table."""
    inv = group.involutions()
    if inv.size == 0:
        return 0
    pos = np.full(group.order, -1, dtype=np.int64)
    pos[inv] = np.arange(inv.size)
    maps = [pos[group.conj(inv, s)] for s in group.gen_index]
    return int(orbit_labels(inv.size, maps).max() + 1)
