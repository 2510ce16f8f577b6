"""Automorphisms of an indexed group and the signed-fixed-point machinery.

An :class:`Automorphism` is a full table on element indices.  Products of
automorphisms are function composition: ``(a * b)(g) = a(b(g))``, and the
conjugate of ``alpha`` by ``delta`` is ``delta alpha delta^-1``.

:class:`AutGroup` keeps Aut(G) in the compact form ``sigma_h tau_t`` where
``sigma_h`` is conjugation by ``h`` and ``tau_t`` runs over a transversal of
Inn(G) in Aut(G).  Since the groups handled here are centerless, the pair
``(h, t)`` is unique, so every element of Aut(G) costs two integers and
products are a handful of index lookups.
"""
from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .permgroup import Group, Permutation, build_chain, involution_class_count, orbit_labels, parse_cycles

logger = logging.getLogger(__name__)


class NotAHomomorphism(ValueError):
    pass


class NotBijective(ValueError):
    pass


class NotInvolutory(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class Automorphism:
    __slots__ = ("group", "table", "origin", "inner_by")

    def __init__(self, group: Group, table, origin: str = "composite", inner_by: int | None = None):
        self.group = group
        self.table = np.asarray(table, dtype=np.int64)
        self.origin = origin
        self.inner_by = inner_by

    def __call__(self, g):
        out = self.table[np.asarray(g, dtype=np.int64)]
        return out if np.ndim(out) else int(out)

    def __mul__(self, other: Automorphism) -> Automorphism:
        return Automorphism(self.group, self.table[other.table])

    def inverse(self) -> Automorphism:
        inv = np.empty_like(self.table)
        inv[self.table] = np.arange(self.table.size)
        return Automorphism(self.group, inv, self.origin)

    def conjugate_by(self, delta: Automorphism) -> Automorphism:
        """``delta self delta^-1``."""
        return delta * self * delta.inverse()

    def __eq__(self, other):
        return isinstance(other, Automorphism) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.table, np.arange(self.table.size)))

    def is_involutory(self) -> bool:
        """``alpha^2 = 1`` (the identity qualifies)."""
        return bool(np.array_equal(self.table[self.table], np.arange(self.table.size)))

    def order(self) -> int:
        cur, k = self.table, 1
        ident = np.arange(self.table.size)
        while not np.array_equal(cur, ident):
            cur = self.table[cur]
            k += 1
        return k

    def generator_images(self) -> list[int]:
        return [int(self.table[s]) for s in self.group.gen_index]

    def describe(self) -> str:
        imgs = "; ".join(self.group.cycles(i) for i in self.generator_images())
        return f"[{imgs}]"

    def __repr__(self):
        return f"Automorphism({self.origin}, {self.describe()})"


def identity_automorphism(group: Group) -> Automorphism:
    return Automorphism(group, group.all, "identity", inner_by=0)


def inner(group: Group, x: int) -> Automorphism:
    """Conjugation ``g -> x g x^-1``."""
    return Automorphism(group, group.conj(group.all, x), "inner", inner_by=int(x))


def conjugation_by(group: Group, perm: Permutation | str) -> Automorphism:
    """Automorphism induced by a permutation normalizing ``group``."""
    if isinstance(perm, str):
        perm = parse_cycles(perm, group.degree)
    arr = np.asarray(perm.images, dtype=np.int64)
    inv = np.argsort(arr)
    # rows are image arrays; b a b^-1 applies b, then a, then b^-1
    rows = group.elements.astype(np.int64)
    conj = inv[rows[:, arr]]
    idx = group._lookup(conj[:, group.base])
    if (idx < 0).any() or not np.array_equal(group.elements[idx].astype(np.int64), conj):
        raise NotAHomomorphism(f"{perm} does not normalize {group.name}")
    return Automorphism(group, idx, "outer")


def from_generator_images(group: Group, images: Sequence, origin: str = "outer") -> Automorphism:
    """The automorphism sending ``group.generators[k]`` to ``images[k]``.

    The map is extended breadth-first along the Cayley graph; every edge
    ``g -> g s`` is then checked, so a returned table is a homomorphism.
    """
    imgs = []
    for im in images:
        imgs.append(group.index(im) if isinstance(im, (Permutation, str)) else int(im))
    if len(imgs) != len(group.gen_index):
        raise ValueError("need one image per generator")
    n = group.order
    phi = np.full(n, -1, dtype=np.int64)
    phi[0] = 0
    frontier = np.zeros(1, dtype=np.int64)
    while frontier.size:
        nxt = []
        for s, t in zip(group.gen_index, imgs):
            h = group.mul(frontier, s)
            img = group.mul(phi[frontier], t)
            known = phi[h] >= 0
            if (phi[h[known]] != img[known]).any():
                raise NotAHomomorphism("generator images violate a relation")
            h_new, first = np.unique(h[~known], return_index=True)
            img_new = img[~known][first]
            if h_new.size:
                # two frontier elements reaching the same h must agree
                chk = img[~known]
                pos = np.searchsorted(h_new, h[~known])
                if (img_new[pos] != chk).any():
                    raise NotAHomomorphism("generator images violate a relation")
                phi[h_new] = img_new
                nxt.append(h_new)
        frontier = np.concatenate(nxt) if nxt else np.empty(0, dtype=np.int64)
    for s, t in zip(group.gen_index, imgs):
        if not np.array_equal(phi[group.mul(group.all, s)], group.mul(phi, t)):
            raise NotAHomomorphism("generator images violate a relation")
    if np.unique(phi).size != n:
        raise NotBijective("generator images do not generate the group")
    return Automorphism(group, phi, origin)


def inner_element(group: Group, alpha) -> int | None:
    """The ``h`` with ``alpha = sigma_h``, or None when alpha is outer."""
    table = alpha.table if isinstance(alpha, Automorphism) else np.asarray(alpha)
    cand = group.all
    for s in group.gen_index:
        cand = cand[group.conj(s, cand) == table[s]]
        if cand.size == 0:
            return None
    for h in cand:
        if np.array_equal(group.conj(group.all, int(h)), table):
            return int(h)
    return None


def check_homomorphism(alpha: Automorphism, samples: int | None = None, rng=None) -> bool:
    """Full check of ``alpha(gh) = alpha(g) alpha(h)`` over generator edges, or sampled pairs."""
    g = alpha.group
    if samples is None:
        for s in g.gen_index:
            if not np.array_equal(alpha.table[g.mul(g.all, s)], g.mul(alpha.table, alpha.table[s])):
                return False
        return alpha.table[0] == 0 and np.unique(alpha.table).size == g.order
    rng = rng or np.random.default_rng(0)
    a = rng.integers(0, g.order, samples)
    b = rng.integers(0, g.order, samples)
    return bool(np.array_equal(alpha.table[g.mul(a, b)], g.mul(alpha.table[a], alpha.table[b])))


# ---------------------------------------------------------------------------


@dataclass
class SignedFixData:
    alpha: Automorphism
    fixed: np.ndarray
    inverted: np.ndarray
    omega: np.ndarray

    @property
    def singletons(self) -> np.ndarray:
        """``G_{-alpha}`` minus ``omega``: the elements usable as a one-element subset."""
        return np.setdiff1d(self.inverted, self.omega)


def signed_fix_data(alpha: Automorphism) -> SignedFixData:
    if not alpha.is_involutory():
        raise NotInvolutory("alpha^2 != 1")
    g = alpha.group
    t = alpha.table
    fixed = np.nonzero(t == g.all)[0]
    inverted = np.nonzero(t == g.inv)[0]
    omega = np.unique(g.mul(t, g.inv))
    return SignedFixData(alpha, fixed, inverted, omega)


def verify_lemma_plus1(alpha: Automorphism) -> bool:
    """For inner involutory ``alpha`` when ``C_G(2) = 1``: ``|G_-alpha| = |omega| + 1``."""
    g = alpha.group
    x = alpha.inner_by if alpha.inner_by is not None else inner_element(g, alpha)
    if x is None or x == 0 or g.mul(x, x) != 0:
        raise PreconditionError("alpha is not induced by an involution of the group")
    if involution_class_count(g) != 1:
        raise PreconditionError("the group has more than one class of involutions")
    data = signed_fix_data(alpha)
    return data.inverted.size == data.omega.size + 1


# ---------------------------------------------------------------------------
# Aut(G) in compact form.


class AutGroup:
    """Aut(G), or a subgroup of it containing Inn(G), in ``sigma_h tau_t`` form.

    ``cosets`` lists the transversal indices ``t`` whose Inn-cosets make up
    the subgroup; the full group uses all of them.
    """

    def __init__(self, group: Group, outer_generators: Sequence[Automorphism] = (),
                 declared_out: int | None = None):
        self.group = group
        inner_gens = [inner(group, s) for s in group.gen_index]
        self.outer_generators = list(outer_generators)
        self.generators = inner_gens + self.outer_generators
        self.inner_index = list(range(len(inner_gens)))
        self._conj_gen = [group.conj(s, group.all) for s in group.gen_index]
        self._build_transversal()
        self.cosets = tuple(range(len(self.reps)))
        self.parent = self
        self._chain = None
        if declared_out is not None and declared_out != self.out_order:
            raise ValueError(f"|Out| computed {self.out_order} != declared {declared_out}")

    # -- construction ------------------------------------------------------

    def _inner_solve(self, table: np.ndarray) -> int:
        g = self.group
        cand = g.all
        for s, cg in zip(g.gen_index, self._conj_gen):
            cand = cand[cg[cand] == table[s]]
            if cand.size == 0:
                return -1
        for h in cand:
            if np.array_equal(g.conj(g.all, int(h)), table):
                return int(h)
        return -1

    def _build_transversal(self):
        g = self.group
        reps = [g.all.copy()]
        rep_inv = [g.all.copy()]
        queue = [0]
        while queue:
            t = queue.pop(0)
            for o in self.outer_generators:
                phi = reps[t][o.table]
                if any(self._inner_solve(phi[ri]) >= 0 for ri in rep_inv):
                    continue
                reps.append(phi)
                inv = np.empty_like(phi)
                inv[phi] = g.all
                rep_inv.append(inv)
                queue.append(len(reps) - 1)
        self.reps, self.rep_inv = reps, rep_inv
        k = len(reps)
        self._c = np.zeros((k, k), dtype=np.int64)
        self._u = np.zeros((k, k), dtype=np.int64)
        for s in range(k):
            for t in range(k):
                self._c[s, t], self._u[s, t] = self._decompose_table(reps[s][reps[t]])
        self._d = np.zeros(k, dtype=np.int64)
        self._v = np.zeros(k, dtype=np.int64)
        for s in range(k):
            self._d[s], self._v[s] = self._decompose_table(rep_inv[s])

    def _decompose_table(self, table: np.ndarray) -> tuple[int, int]:
        for t, ri in enumerate(self.rep_inv):
            h = self._inner_solve(table[ri])
            if h >= 0:
                return h, t
        raise ValueError("table is not in the group generated by the catalog automorphisms")

    # -- sizes ---------------------------------------------------------------

    @property
    def out_order(self) -> int:
        return len(self.reps)

    @property
    def order(self) -> int:
        return self.group.order * len(self.cosets)

    # -- compact arithmetic (h, t arrays broadcast) ---------------------------

    def decompose(self, alpha: Automorphism | np.ndarray) -> tuple[int, int]:
        table = alpha.table if isinstance(alpha, Automorphism) else np.asarray(alpha)
        return self._decompose_table(table)

    @staticmethod
    def _prep(*args):
        arrs = np.broadcast_arrays(*(np.asarray(v, dtype=np.int64) for v in args))
        shape = arrs[0].shape
        return shape, [np.atleast_1d(a).ravel() for a in arrs]

    @staticmethod
    def _out(shape, *arrs):
        res = tuple(a.reshape(shape) if shape else int(a[0]) for a in arrs)
        return res if len(res) > 1 else res[0]

    def _apply(self, h, t, g):
        out = np.empty(g.shape, dtype=np.int64)
        for tt in np.unique(t):
            m = t == tt
            out[m] = self.group.conj(self.reps[tt][g[m]], h[m])
        return out

    def _mul(self, h1, t1, h2, t2):
        g = self.group
        moved = self._apply(np.zeros_like(h2), t1, h2)
        return g.mul(g.mul(h1, moved), self._c[t1, t2]), self._u[t1, t2]

    def _inv(self, h, t):
        g = self.group
        hi = g.inv[h]
        out = np.empty(h.shape, dtype=np.int64)
        for tt in np.unique(t):
            m = t == tt
            out[m] = self.rep_inv[tt][hi[m]]
        return g.mul(out, self._d[t]), self._v[t]

    def apply(self, h, t, g):
        """``sigma_h tau_t`` applied to element indices ``g``."""
        shape, (h, t, g) = self._prep(h, t, g)
        return self._out(shape, self._apply(h, t, g))

    def mul(self, h1, t1, h2, t2):
        """``(sigma_h1 tau_t1)(sigma_h2 tau_t2)`` as ``(h, t)``."""
        shape, args = self._prep(h1, t1, h2, t2)
        return self._out(shape, *self._mul(*args))

    def inv(self, h, t):
        shape, args = self._prep(h, t)
        return self._out(shape, *self._inv(*args))

    def conj(self, h, t, k, s):
        """``beta alpha beta^-1`` for ``alpha = (h, t)``, ``beta = (k, s)``."""
        shape, (h, t, k, s) = self._prep(h, t, k, s)
        a = self._mul(k, s, h, t)
        b = self._inv(k, s)
        return self._out(shape, *self._mul(*a, *b))

    def table(self, h: int, t: int) -> np.ndarray:
        return self.group.conj(self.reps[t], h)

    def automorphism(self, h: int, t: int, origin: str = "composite") -> Automorphism:
        return Automorphism(self.group, self.table(int(h), int(t)), origin,
                            inner_by=int(h) if t == 0 else None)

    # -- subgroup queries ----------------------------------------------------

    def contains(self, alpha: Automorphism) -> bool:
        try:
            _, t = self.decompose(alpha)
        except ValueError:
            return False
        return t in self.cosets and check_homomorphism(alpha)

    def elements(self) -> Iterator[tuple[int, int]]:
        for t in self.cosets:
            for h in range(self.group.order):
                yield h, t

    def random_element(self, rng) -> tuple[int, int]:
        return int(rng.integers(self.group.order)), int(rng.choice(self.cosets))

    def chain(self, seed: int = 0):
        """Stabilizer chain on the element index space (randomized, known order)."""
        if self._chain is None:
            rng = np.random.default_rng(seed)
            self._chain = build_chain([a.table for a in self.generators], self.group.order,
                                      known_order=self.order,
                                      random_element=lambda: self.table(*self.random_element(rng)))
        return self._chain

    def subgroup(self, cosets: Sequence[int], generators: Sequence[Automorphism]) -> AutGroup:
        sub = object.__new__(AutGroup)
        sub.__dict__.update(self.__dict__)
        sub.cosets = tuple(sorted(set(int(c) for c in cosets)))
        sub.generators = [self.generators[i] for i in self.inner_index] + list(generators)
        sub.outer_generators = list(generators)
        sub.parent = self
        sub._chain = None
        return sub

    # -- involutions and centralizers ------------------------------------------

    def involutions(self) -> list[tuple[np.ndarray, int]]:
        """All involutions ``(h, t)`` grouped by coset; the identity excluded."""
        g = self.group
        out = []
        for t in self.cosets:
            if self._u[t, t] != 0:
                continue
            h = g.all
            sq = g.mul(g.mul(h, self.apply(0, t, h)), self._c[t, t])
            hs = h[sq == 0]
            if t == 0:
                hs = hs[hs != 0]
            if hs.size:
                out.append((hs, t))
        return out

    def centralizer(self, h0: int, t0: int) -> list[tuple[np.ndarray, int]]:
        """Elements ``(k, s)`` commuting with ``(h0, t0)``, by direct solution per coset."""
        g = self.group
        out = []
        for s in self.cosets:
            if self._u[s, t0] != self._u[t0, s]:
                continue
            k = g.all
            lhs = g.mul(g.mul(k, self.apply(0, s, h0)), self._c[s, t0])
            rhs = g.mul(g.mul(h0, self.apply(0, t0, k)), self._c[t0, s])
            ks = k[lhs == rhs]
            if ks.size:
                out.append((ks, s))
        return out

    def conjugators(self, a: tuple[int, int], b: tuple[int, int]) -> list[tuple[np.ndarray, int]]:
        """All ``delta`` with ``delta a delta^-1 = b``."""
        g = self.group
        out = []
        for s in self.cosets:
            # conjugate by tau_s first, then solve for the inner part
            hs, ts = self.conj(a[0], a[1], 0, s)
            if ts != b[1]:
                continue
            k = g.all
            # sigma_k (hs, ts) sigma_k^-1 = (k hs tau_ts(k^-1), ts)
            val = g.mul(g.mul(k, hs), self.apply(0, ts, g.inverse(k)))
            ks = k[val == b[0]]
            if ks.size:
                # delta = sigma_k tau_s
                out.append((ks, s))
        return out

    def involution_classes(self) -> list[tuple[int, int, int]]:
        """Aut-conjugacy classes of involutions: ``(h, t, class size)`` per class.

        The representative of a class is its least ``(t, h)``; classes are
        listed in that order, so inner classes come first.
        """
        blocks = self.involutions()
        if not blocks:
            return []
        n = self.group.order
        offset = {}
        lookup = np.full((len(self.reps), n), -1, dtype=np.int64)
        hs_all, ts_all = [], []
        start = 0
        for hs, t in blocks:
            lookup[t, hs] = np.arange(start, start + hs.size)
            offset[t] = start
            start += hs.size
            hs_all.append(hs)
            ts_all.append(np.full(hs.size, t))
        hs_all = np.concatenate(hs_all)
        ts_all = np.concatenate(ts_all)
        maps = []
        for gen in self.generators:
            k, s = self.decompose(gen)
            h2, t2 = self.conj(hs_all, ts_all, k, s)
            maps.append(lookup[t2, h2])
        labels = orbit_labels(start, maps)
        result = []
        for lab in range(labels.max() + 1):
            members = np.nonzero(labels == lab)[0]
            first = members[0]
            result.append((int(hs_all[first]), int(ts_all[first]), int(members.size)))
        result.sort(key=lambda r: (r[1], r[0]))
        return result


def build_aut_group(group: Group, outer_maps: Sequence[Sequence] = (),
                    declared_out: int | None = None) -> AutGroup:
    """Aut(G) from catalog outer maps, each given as generator images."""
    outer = [from_generator_images(group, images) for images in outer_maps]
    for k, o in enumerate(outer):
        if inner_element(group, o) is not None:
            raise ValueError(f"catalog outer map {k + 1} is inner")
    return AutGroup(group, outer, declared_out)


# ---------------------------------------------------------------------------


def _compact_closure(aut: AutGroup, gens: list[tuple[int, int]], limit: int) -> set[int]:
    n = aut.group.order
    seen = {0}
    frontier_h = np.zeros(1, dtype=np.int64)
    frontier_t = np.zeros(1, dtype=np.int64)
    while frontier_h.size:
        new_h, new_t = [], []
        for k, s in gens:
            h, t = aut.mul(frontier_h, frontier_t, k, s)
            keys = np.atleast_1d(t) * n + np.atleast_1d(h)
            for key in np.unique(keys):
                key = int(key)
                if key not in seen:
                    seen.add(key)
                    new_h.append(key % n)
                    new_t.append(key // n)
        if len(seen) > limit:
            raise RuntimeError("closure larger than the expected subgroup order")
        frontier_h = np.asarray(new_h, dtype=np.int64)
        frontier_t = np.asarray(new_t, dtype=np.int64)
    return seen


@dataclass
class StabilizerResult:
    generators: list[Automorphism]
    compact: list[tuple[int, int]]
    orbit_size: int
    order: int


def aut_stabilizer(aut: AutGroup, alpha: Automorphism) -> StabilizerResult:
    """Generators of ``Aut(G)_alpha``, the centralizer of ``alpha``.

    Orbit-stabilizer on the conjugation action of ``aut`` on itself: the
    orbit of ``alpha`` is enumerated with a transversal, Schreier generators
    ``u_j^-1 s u_i`` are collected and thinned to a generating set.
    """
    n = aut.group.order
    try:
        h0, t0 = aut.decompose(alpha)
    except ValueError:
        raise PreconditionError("alpha is not in Aut(G)") from None
    if t0 not in aut.cosets:
        raise PreconditionError("alpha is not in this automorphism group")
    gens = [aut.decompose(g) for g in aut.generators]
    index = {t0 * n + h0: 0}
    orbit_h, orbit_t = [h0], [t0]
    trans_h, trans_t = [0], [0]
    frontier = [0]
    while frontier:
        fh = np.asarray([orbit_h[i] for i in frontier])
        ft = np.asarray([orbit_t[i] for i in frontier])
        uh = np.asarray([trans_h[i] for i in frontier])
        ut = np.asarray([trans_t[i] for i in frontier])
        nxt = []
        for k, s in gens:
            ch, ct = aut.conj(fh, ft, k, s)
            nh, nt = aut.mul(k, s, uh, ut)
            for a, b, c, d in zip(np.atleast_1d(ch), np.atleast_1d(ct), np.atleast_1d(nh), np.atleast_1d(nt)):
                key = int(b) * n + int(a)
                if key not in index:
                    index[key] = len(orbit_h)
                    orbit_h.append(int(a))
                    orbit_t.append(int(b))
                    trans_h.append(int(c))
                    trans_t.append(int(d))
                    nxt.append(index[key])
        frontier = nxt
    orbit_size = len(orbit_h)
    if aut.order % orbit_size:
        raise RuntimeError("orbit size does not divide |Aut|")
    order = aut.order // orbit_size
    oh, ot = np.asarray(orbit_h), np.asarray(orbit_t)
    th, tt = np.asarray(trans_h), np.asarray(trans_t)
    schreier = set()
    for k, s in gens:
        ch, ct = aut.conj(oh, ot, k, s)
        j = np.asarray([index[int(b) * n + int(a)] for a, b in zip(ch, ct)])
        # u_j^-1 * s * u_i
        ih, it = aut.inv(th[j], tt[j])
        mh, mt = aut.mul(ih, it, k, s)
        sh, st = aut.mul(mh, mt, th, tt)
        schreier.update(int(b) * n + int(a) for a, b in zip(np.atleast_1d(sh), np.atleast_1d(st)))
    schreier.discard(0)
    kept: list[tuple[int, int]] = []
    closure = {0}
    for key in sorted(schreier):
        if len(closure) == order:
            break
        if key in closure:
            continue
        kept.append((key % n, key // n))
        closure = _compact_closure(aut, kept, order)
    if len(closure) != order:
        raise RuntimeError(f"stabilizer generators span {len(closure)} elements, expected {order}")
    generators = [aut.automorphism(h, t) for h, t in kept]
    return StabilizerResult(generators, kept, orbit_size, order)


def delta_subgroup(aut: AutGroup, alpha: Automorphism, stab: StabilizerResult | None = None) -> AutGroup:
    """``Inn(G) Aut(G)_alpha`` as a subgroup of ``aut``."""
    stab = stab or aut_stabilizer(aut, alpha)
    cosets = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for t in frontier:
            for _, s in stab.compact:
                u = int(aut._u[t, s])
                if u not in cosets:
                    cosets.add(u)
                    nxt.append(u)
        frontier = nxt
    return aut.subgroup(cosets, stab.generators)


def quasi_fusion_labels(alpha: Automorphism, stab: StabilizerResult) -> np.ndarray:
    """Partition of G into quasi-fusion classes ``{alpha(g) a^gamma g^-1}``."""
    g = alpha.group
    maps = [g.mul(g.mul(alpha(s), g.all), g.inverse(s)) for s in g.gen_index]
    maps += [gam.table for gam in stab.generators]
    return orbit_labels(g.order, maps)


def quasi_fusion_class(alpha: Automorphism, a: int, stab: StabilizerResult) -> np.ndarray:
    labels = quasi_fusion_labels(alpha, stab)
    return np.nonzero(labels == labels[a])[0]


def fusion_labels(aut: AutGroup) -> np.ndarray:
    return orbit_labels(aut.group.order, [gen.table for gen in aut.generators])


def fusion_class_count(aut: AutGroup, n: int) -> int:
    """``F_G(n)``: number of Aut(G)-orbits on elements of order ``n``."""
    g = aut.group
    if n < 1 or g.order % n:
        warnings.warn(f"{n} does not divide |G| = {g.order}", stacklevel=2)
        return 0
    labels = fusion_labels(aut)
    return int(np.unique(labels[g.element_orders == n]).size)


def centralizer_size(aut: AutGroup, alpha: Automorphism) -> int:
    h0, t0 = aut.decompose(alpha)
    return sum(ks.size for ks, _ in aut.centralizer(h0, t0))
