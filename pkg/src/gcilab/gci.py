"""Pair families, the l_alpha action, GCI-equivalence witnesses and the local m-GCI verifier.

For an involutory automorphism alpha the group ``G x Aut(G)_alpha`` acts on
G by ``a^(g, gamma) = alpha(g) gamma(a) g^-1``.  With this module's
conventions (automorphisms compose as functions) applying ``(g1, gamma1)``
and then ``(g2, gamma2)`` is the single step ``(g2 gamma2(g1), gamma2 gamma1)``.

A GCI witness ``(x, gamma)`` links ``(S1, alpha1)`` to ``(S2, alpha2)`` when
``gamma alpha1 gamma^-1 = alpha2`` and ``alpha2(x) gamma(S1) x^-1 = S2``; the
map ``v -> gamma(v) x^-1`` is then a graph isomorphism.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .autgroup import (AutGroup, Automorphism, NotInvolutory, PreconditionError, StabilizerResult,
                       aut_stabilizer, identity_automorphism, inner, signed_fix_data)
from .gcgraph import CycleCensus, GcSubset, census, cycle_census, build_graph, validate_subset
from .permgroup import orbit_labels

logger = logging.getLogger(__name__)

REPORT_SCHEMA = "gcilab.local-gci/1"
FULL_CENSUS_LIMIT = 10**4
SETWISE_CAP = 10**4


@dataclass(frozen=True, order=True)
class ElementPair:
    lo: int
    hi: int

    @classmethod
    def of(cls, a, b) -> ElementPair:
        a, b = int(a), int(b)
        return cls(min(a, b), max(a, b))

    @property
    def members(self) -> tuple:
        return (self.lo,) if self.lo == self.hi else (self.lo, self.hi)

    def is_singleton(self) -> bool:
        return self.lo == self.hi


@dataclass
class PairFamily:
    kind: str  # Pi_alpha, Omega, OmegaStar, OmegaStarConjClass
    anchor: object
    order_n: int | None
    pairs: tuple

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        return pair in set(self.pairs)

    def elements(self) -> np.ndarray:
        return np.unique([m for p in self.pairs for m in p.members]).astype(np.int64)


def _omega_mask(alpha: Automorphism) -> np.ndarray:
    mask = np.zeros(alpha.group.order, dtype=bool)
    mask[signed_fix_data(alpha).omega] = True
    return mask


def pi_family(alpha: Automorphism) -> PairFamily:
    """``{{a, alpha(a^-1)} : a not in omega_alpha(G)}``."""
    g = alpha.group
    om = _omega_mask(alpha)
    a = g.all[~om]
    b = alpha(g.inv[a])
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    keep = lo == a
    pairs = tuple(ElementPair(int(p), int(q)) for p, q in zip(lo[keep], hi[keep]))
    return PairFamily("Pi_alpha", alpha, None, pairs)


def _inverse_pairs(group, elems) -> list[ElementPair]:
    elems = np.asarray(elems, dtype=np.int64)
    inv = group.inv[elems]
    keep = elems <= inv
    return [ElementPair(int(p), int(q)) for p, q in zip(elems[keep], inv[keep])]


def omega_star_x(group, x: int) -> PairFamily:
    """``{{x g, g^-1 x^-1} : g in omega_alpha(G)}`` for ``alpha = sigma_x``."""
    om = signed_fix_data(inner(group, x)).omega
    c = np.unique(group.mul(x, om))
    return PairFamily("OmegaStarConjClass", int(x), 2, tuple(_inverse_pairs(group, c)))


def omega_family(group, x: int, n: int, starred: bool = False) -> PairFamily:
    """``Omega_x(G, n)``; with ``starred`` the n = 2 case drops ``omega*_x(G)``."""
    x = int(x)
    if group.order % n:
        return PairFamily("OmegaStar" if starred else "Omega", x, n, ())
    g = group.all
    c = group.mul(x, g)
    sel = group.element_orders[c] == n
    if starred and n == 2:
        if group.order_of(x) != 2:
            raise PreconditionError("starred families need x to be an involution")
        om = _omega_mask(inner(group, x))
        sel &= ~om[g]
    pairs = _inverse_pairs(group, np.unique(c[sel]))
    return PairFamily("OmegaStar" if starred else "Omega", x, n, tuple(pairs))


# ---------------------------------------------------------------------------
# the l_alpha action


def _commutes(alpha: Automorphism, gamma: Automorphism) -> bool:
    return bool(np.array_equal(alpha.table[gamma.table], gamma.table[alpha.table]))


def ell(alpha: Automorphism, a, g: int, gamma: Automorphism):
    """``alpha(g) gamma(a) g^-1``."""
    grp = alpha.group
    return grp.mul(grp.mul(alpha(g), gamma(a)), grp.inv[g])


def ell_action(alpha: Automorphism, pair: ElementPair, g: int, gamma: Automorphism) -> ElementPair:
    if not _commutes(alpha, gamma):
        raise PreconditionError("gamma does not commute with alpha")
    grp = alpha.group
    a = pair.lo
    if int(alpha(grp.inv[a])) != pair.hi and int(alpha(grp.inv[pair.hi])) != a:
        raise ValueError("pair is not of the form {a, alpha(a^-1)}")
    b = int(ell(alpha, a, g, gamma))
    return ElementPair.of(b, alpha(grp.inv[b]))


def compose_ell(aut: AutGroup, first: tuple[int, tuple[int, int]], second: tuple[int, tuple[int, int]]):
    """Single ``(g, gamma)`` equal to applying ``first`` and then ``second``; gammas compact."""
    g1, (h1, t1) = first
    g2, (h2, t2) = second
    grp = aut.group
    g = int(grp.mul(g2, aut.apply(h2, t2, g1)))
    return g, aut.mul(h2, t2, h1, t1)


class EllForest:
    """Orbits of the l_alpha action together with a BFS tree per orbit.

    ``maps`` are permutations of a point set; ``steps[j]`` says what map j
    is: ``("g", s)`` for ``(s, 1)``, ``("gamma", (k, t))`` for ``(1, gamma)``
    and ``("same",)`` for a move that does not change the subset.
    """

    def __init__(self, n: int, maps: list[np.ndarray], steps: list[tuple]):
        self.n = n
        self.maps = maps
        self.steps = steps
        self.labels = orbit_labels(n, maps)
        self.parent = np.full(n, -1, dtype=np.int64)
        self.via = np.full(n, -1, dtype=np.int64)
        _, roots = np.unique(self.labels, return_index=True)
        self.roots = roots
        seen = np.zeros(n, dtype=bool)
        seen[roots] = True
        frontier = roots
        while frontier.size:
            nxt = []
            for j, m in enumerate(maps):
                img = m[frontier]
                new = ~seen[img]
                img_new, first = np.unique(img[new], return_index=True)
                if img_new.size:
                    seen[img_new] = True
                    self.parent[img_new] = frontier[new][first]
                    self.via[img_new] = j
                    nxt.append(img_new)
            frontier = np.concatenate(nxt) if nxt else np.empty(0, dtype=np.int64)

    def root_of(self, v: int) -> int:
        return int(self.roots[self.labels[v]])

    def path(self, v: int) -> list[int]:
        steps = []
        while self.parent[v] >= 0:
            steps.append(int(self.via[v]))
            v = int(self.parent[v])
        return steps[::-1]

    def witness(self, aut: AutGroup, v: int) -> tuple[int, tuple[int, int]]:
        """``(g, gamma)`` taking the subset at the root of v's orbit to the subset at v."""
        cur = (0, (0, 0))
        for j in self.path(v):
            step = self.steps[j]
            if step[0] == "g":
                cur = compose_ell(aut, cur, (step[1], (0, 0)))
            elif step[0] == "gamma":
                cur = compose_ell(aut, cur, (0, step[1]))
        return cur


def ell_maps(alpha: Automorphism, stab: StabilizerResult):
    grp = alpha.group
    maps, steps = [], []
    for s in grp.gen_index:
        maps.append(grp.mul(grp.mul(alpha(s), grp.all), grp.inv[s]))
        steps.append(("g", int(s)))
    for gam, comp in zip(stab.generators, stab.compact):
        maps.append(gam.table)
        steps.append(("gamma", comp))
    return maps, steps


def quasi_fused_witness(aut: AutGroup, alpha: Automorphism, a: int, b: int,
                        inverse: bool = False, stab: StabilizerResult | None = None):
    """``(g, gamma)`` with ``b = alpha(g) gamma(a) g^-1``, or None.

    With ``inverse`` the source is ``alpha(a^-1)`` instead of ``a``.
    """
    grp = alpha.group
    if not alpha.is_involutory():
        raise NotInvolutory("alpha^2 != 1")
    stab = stab or aut_stabilizer(aut, alpha)
    if inverse:
        a = int(alpha(grp.inv[a]))
    a, b = int(a), int(b)
    if a == b:
        return 0, identity_automorphism(grp)
    forest = EllForest(grp.order, *ell_maps(alpha, stab))
    if forest.labels[a] != forest.labels[b]:
        return None
    ga, (ha, ta) = forest.witness(aut, a)
    gb, (hb, tb) = forest.witness(aut, b)
    # root -> a is (ga, A); undo it, then root -> b
    ih, it = aut.inv(ha, ta)
    back_g = int(grp.inv[aut.apply(ih, it, ga)])
    g, (h, t) = compose_ell(aut, (back_g, (ih, it)), (gb, (hb, tb)))
    gamma = aut.automorphism(h, t)
    if int(ell(alpha, a, g, gamma)) != b:
        raise RuntimeError("quasi-fusion witness failed to verify")
    return g, gamma


# ---------------------------------------------------------------------------
# pair correspondence and Delta_alpha orbits


def _pair_image(table: np.ndarray, pair: ElementPair) -> ElementPair:
    return ElementPair.of(table[pair.lo], table[pair.hi])


def transform_correspondence(alpha: Automorphism, a: int, b: int, g: int, gamma: Automorphism) -> bool:
    """Check that ``sigma_g gamma`` sends ``{xa, a^-1 x}`` to ``{xb, b^-1 x}``.

    ``alpha`` must be ``sigma_x`` and ``(g, gamma)`` must carry the pair of a
    to the pair of b under l_alpha.
    """
    grp = alpha.group
    x = alpha.inner_by
    if x is None or grp.order_of(x) != 2:
        raise PreconditionError("alpha must be conjugation by an involution")
    if ell_action(alpha, ElementPair.of(a, alpha(grp.inv[a])), g, gamma) != ElementPair.of(b, alpha(grp.inv[b])):
        raise PreconditionError("(g, gamma) does not map the pair of a to the pair of b")
    delta = inner(grp, g) * gamma
    lhs = ElementPair.of(grp.mul(x, a), grp.mul(grp.inv[a], x))
    rhs = ElementPair.of(grp.mul(x, b), grp.mul(grp.inv[b], x))
    return _pair_image(delta.table, lhs) == rhs


def correspondence_converse(aut: AutGroup, alpha: Automorphism, a: int, b: int, delta: Automorphism,
                            cent=None):
    """Factor ``delta = sigma_g gamma`` with gamma in Aut(G)_alpha and return ``(g, gamma)``.

    ``delta`` must send ``{xa, a^-1 x}`` to ``{xb, b^-1 x}``; the result is
    re-checked against the l_alpha action, so None means the factorisation
    does not give a witness.  ``cent`` may carry a precomputed
    ``aut.centralizer`` of alpha.
    """
    grp = alpha.group
    hd, td = aut.decompose(delta)
    h0, t0 = aut.decompose(alpha)
    if cent is None:
        cent = aut.centralizer(h0, t0)
    for ks, s in cent:
        if s != td:
            continue
        k = int(ks[0])
        # sigma_g = delta gamma^-1
        ih, it = aut.inv(k, s)
        gh, gt = aut.mul(hd, td, ih, it)
        if gt != 0:
            continue
        gamma = aut.automorphism(k, s)
        pa = ElementPair.of(a, alpha(grp.inv[a]))
        pb = ElementPair.of(b, alpha(grp.inv[b]))
        if ell_action(alpha, pa, gh, gamma) == pb:
            return int(gh), gamma
        return None
    return None


def delta_maps(aut: AutGroup, stab: StabilizerResult) -> list[np.ndarray]:
    return [aut.generators[i].table for i in aut.inner_index] + [gam.table for gam in stab.generators]


@dataclass
class OrbitDecomposition:
    transitive: bool
    orbits: list[list[ElementPair]]


def delta_orbit_transitive(aut: AutGroup, alpha: Automorphism, family: PairFamily,
                           stab: StabilizerResult | None = None) -> OrbitDecomposition:
    """Orbits of ``Delta_alpha`` on a family of pairs ``{c, c^-1}``, acting elementwise."""
    grp = alpha.group
    if not family.pairs:
        return OrbitDecomposition(True, [])
    stab = stab or aut_stabilizer(aut, alpha)
    labels = orbit_labels(grp.order, delta_maps(aut, stab) + [grp.inv])
    by_label: dict[int, list[ElementPair]] = {}
    for p in family.pairs:
        by_label.setdefault(int(labels[p.lo]), []).append(p)
    orbits = [by_label[k] for k in sorted(by_label)]
    return OrbitDecomposition(len(orbits) == 1, orbits)


def aut_setwise_stabilizer_check(aut: AutGroup, x: int, cap: int = SETWISE_CAP,
                                 stab: StabilizerResult | None = None) -> bool:
    """Setwise stabilizer of ``omega*_x(G)`` in Aut(G), by enumeration, against ``Delta_alpha``."""
    from .autgroup import delta_subgroup
    grp = aut.group
    if aut.order > cap:
        raise PreconditionError(f"|Aut(G)| = {aut.order} exceeds the enumeration cap {cap}")
    alpha = inner(grp, x)
    stab = stab or aut_stabilizer(aut, alpha)
    fam = omega_star_x(grp, x)
    target = {(p.lo, p.hi) for p in fam.pairs}
    lo = np.asarray([p.lo for p in fam.pairs])
    hi = np.asarray([p.hi for p in fam.pairs])
    found = set()
    for t in aut.cosets:
        for h in range(grp.order):
            tab = aut.table(h, t)
            a, b = tab[lo], tab[hi]
            img = set(zip(np.minimum(a, b).tolist(), np.maximum(a, b).tolist()))
            if img == target:
                found.add((h, t))
    delta = delta_subgroup(aut, alpha, stab)
    expected = {(h, t) for t in delta.cosets for h in range(grp.order)}
    return found == expected


# ---------------------------------------------------------------------------
# GCI-equivalence witnesses


@dataclass
class GciWitness:
    x: int
    gamma: Automorphism
    lhs: GcSubset
    rhs: GcSubset
    gamma_compact: tuple | None = None

    def to_json(self) -> dict:
        grp = self.lhs.group
        return {"x": grp.cycles(self.x), "gamma": self.gamma.describe()}


def verify_witness(w: GciWitness) -> bool:
    """Direct evaluation of both defining equations."""
    grp = w.lhs.group
    a1, a2 = w.lhs.alpha, w.rhs.alpha
    if a1.conjugate_by(w.gamma) != a2:
        return False
    s1 = np.asarray(w.lhs.members)
    img = grp.mul(grp.mul(a2(w.x), w.gamma(s1)), grp.inv[w.x])
    return sorted(np.atleast_1d(img).tolist()) == sorted(w.rhs.members)


def _inner_signature(grp, alpha: Automorphism, subset: GcSubset):
    c = alpha.inner_by
    s = np.asarray(subset.members)
    return sorted(grp.element_orders[grp.mul(grp.inv[c], s)].tolist())


def gci_equivalence_witness(aut: AutGroup, lhs: GcSubset, rhs: GcSubset) -> GciWitness | None:
    """Search for ``(x, gamma)`` linking ``lhs`` to ``rhs``; None when none exists.

    Search order: conjugacy of the two automorphisms, an x-invariant order
    signature when both are inner, then a full scan over the conjugators and
    all x.
    """
    grp = aut.group
    if len(lhs) != len(rhs):
        return None
    a1 = aut.decompose(lhs.alpha)
    a2 = aut.decompose(rhs.alpha)
    deltas = aut.conjugators(a1, a2)
    if not deltas:
        return None
    if a1[1] == 0 and a2[1] == 0:
        al1 = aut.automorphism(*a1)
        al2 = aut.automorphism(*a2)
        if _inner_signature(grp, al1, lhs) != _inner_signature(grp, al2, rhs):
            return None
    s1 = np.asarray(lhs.members, dtype=np.int64)
    s2 = np.asarray(sorted(rhs.members), dtype=np.int64)
    alpha2 = rhs.alpha
    ax = alpha2.table
    xinv = grp.inv
    for ks, s in deltas:
        for k in ks:
            k = int(k)
            t_img = aut.apply(k, s, s1)
            t_img = np.atleast_1d(t_img)
            # alpha2(x) t0 x^-1 must land in S2
            first = grp.mul(grp.mul(ax, t_img[0]), xinv)
            cand = grp.all[np.isin(first, s2)]
            for x in cand:
                img = np.sort(grp.mul(grp.mul(ax[x], t_img), xinv[x]))
                if np.array_equal(np.unique(img), s2) and img.size == s2.size:
                    w = GciWitness(int(x), aut.automorphism(k, s), lhs, rhs, (k, s))
                    if not verify_witness(w):
                        raise RuntimeError("witness search produced an invalid witness")
                    return w
    return None


# ---------------------------------------------------------------------------
# local m-GCI verifier


@dataclass
class InvolutionRep:
    index: int
    h: int
    t: int
    class_size: int
    alpha: Automorphism
    stab: StabilizerResult
    signed: object

    @property
    def kind(self) -> str:
        return "inner" if self.t == 0 else "outer"

    def describe(self) -> str:
        grp = self.alpha.group
        if self.t == 0:
            return f"sigma_{grp.cycles(self.h)}"
        return self.alpha.describe()


@dataclass
class SubsetOrbit:
    rep_index: int
    kind: str  # singleton, pair, two-singletons
    members: list  # list of element tuples, root first
    census: CycleCensus
    witnesses: list = field(default_factory=list)  # (member position, x, (h, t))


def involution_reps(aut: AutGroup) -> list[InvolutionRep]:
    reps = []
    for i, (h, t, size) in enumerate(aut.involution_classes()):
        alpha = aut.automorphism(h, t, "inner" if t == 0 else "outer")
        stab = aut_stabilizer(aut, alpha)
        reps.append(InvolutionRep(i, h, t, size, alpha, stab, signed_fix_data(alpha)))
    return reps


def _subset_orbits(aut: AutGroup, rep: InvolutionRep, m: int, full_census: bool) -> list[SubsetOrbit]:
    alpha = rep.alpha
    grp = alpha.group
    n = grp.order
    maps, steps = ell_maps(alpha, rep.stab)
    partner = alpha.table[grp.inv]
    forest = EllForest(n, maps + [partner], steps + [("same",)])
    om = np.zeros(n, dtype=bool)
    om[rep.signed.omega] = True
    singles = rep.signed.singletons
    out: list[SubsetOrbit] = []

    def element_orbits(points, kind):
        if points.size == 0:
            return
        labels = forest.labels[points]
        for lab in np.unique(labels):
            pts = points[labels == lab]
            root = forest.root_of(int(pts[0]))
            if kind == "pair":
                subsets = [tuple(sorted({int(p), int(partner[p])})) for p in pts]
            else:
                subsets = [(int(p),) for p in pts]
            order = sorted(range(len(pts)), key=lambda i: (int(pts[i]) != root, subsets[i]))
            pts = pts[order]
            subsets = [subsets[i] for i in order]
            orb = SubsetOrbit(rep.index, kind, subsets, None)
            orb._points = pts
            orb._forest = forest
            out.append(orb)

    element_orbits(singles, "singleton")
    if m >= 2:
        cand = grp.all[~om]
        cand = cand[cand < partner[cand]]
        element_orbits(cand, "pair")
        k = singles.size
        if k >= 2:
            pos = np.full(n, -1, dtype=np.int64)
            pos[singles] = np.arange(k)
            iu, ju = np.triu_indices(k, 1)
            npairs = iu.size
            pid = np.full((k, k), -1, dtype=np.int64)
            pid[iu, ju] = np.arange(npairs)
            pid[ju, iu] = np.arange(npairs)
            pmaps = []
            for mp in maps:
                pi = pos[mp[singles]]
                pmaps.append(pid[pi[iu], pi[ju]])
            pforest = EllForest(npairs, pmaps, steps)
            for lab in np.unique(pforest.labels):
                pts = np.nonzero(pforest.labels == lab)[0]
                subsets = [tuple(sorted((int(singles[iu[p]]), int(singles[ju[p]])))) for p in pts]
                orb = SubsetOrbit(rep.index, "two-singletons", subsets, None)
                orb._points = pts
                orb._forest = pforest
                out.append(orb)

    for orb in out:
        subsets = [validate_subset(alpha, s) for s in (orb.members if full_census else orb.members[:1])]
        cs = {census(s) for s in subsets}
        if len(cs) != 1:
            raise RuntimeError(f"census not constant on an l_alpha orbit of {rep.describe()}")
        orb.census = cs.pop()
    return out


def _orbit_witnesses(aut: AutGroup, rep: InvolutionRep, orb: SubsetOrbit, limit: int | None):
    """Witnesses from the orbit's first subset to the others, each verified."""
    alpha = rep.alpha
    root = validate_subset(alpha, orb.members[0])
    idx = range(1, len(orb.members))
    if limit is not None and len(orb.members) - 1 > limit:
        step = (len(orb.members) - 1) / limit
        idx = sorted({1 + int(i * step) for i in range(limit)})
    checked = 0
    last = None
    for i in idx:
        g, (h, t) = orb._forest.witness(aut, int(orb._points[i]))
        w = GciWitness(g, aut.automorphism(h, t), root, validate_subset(alpha, orb.members[i]), (h, t))
        if not verify_witness(w):
            raise RuntimeError("l_alpha witness failed direct verification")
        checked += 1
        last = w
    return checked, last


@dataclass
class LocalGciReport:
    group: str
    m: int
    mode: str
    verdict: bool
    reps: list
    buckets: list
    counterexample: dict | None
    witnesses_checked: int
    timing: dict = field(default_factory=dict)

    def to_json(self, timing: bool = False) -> dict:
        doc = {
            "schema": REPORT_SCHEMA,
            "group": self.group,
            "m": self.m,
            "mode": self.mode,
            "reading": "local: alpha ranges over involutory automorphisms alpha != 1",
            "isomorphism_criterion": "cycle census equality (valency <= 2)",
            "verdict": "local-m-GCI" if self.verdict else "not-local-m-GCI",
            "involution_classes": self.reps,
            "buckets": self.buckets,
            "counterexample": self.counterexample,
            "witnesses_checked": self.witnesses_checked,
        }
        if timing:
            doc["timing"] = {k: round(v, 3) for k, v in self.timing.items()}
        return doc


def _subset_json(grp, rep: InvolutionRep, members) -> dict:
    return {"alpha": rep.index, "S": [grp.cycles(s) for s in members]}


def verify_local_mgci(entry, m: int, jobs: int = 1) -> LocalGciReport:
    """Decide local m-GCI for a catalog group, m in {1, 2}."""
    if m not in (1, 2):
        raise ValueError("m must be 1 or 2")
    grp, aut = entry.group, entry.aut
    timing = {}
    t0 = time.perf_counter()
    reps = involution_reps(aut)
    timing["involution_classes"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    full = grp.order <= FULL_CENSUS_LIMIT
    if jobs > 1 and len(reps) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            per_rep = list(pool.map(lambda r: _subset_orbits(aut, r, m, full), reps))
    else:
        per_rep = [_subset_orbits(aut, r, m, full) for r in reps]
    timing["census"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    buckets: dict[CycleCensus, list[tuple[InvolutionRep, SubsetOrbit]]] = {}
    for rep, orbs in zip(reps, per_rep):
        for orb in orbs:
            buckets.setdefault(orb.census, []).append((rep, orb))
    limit = None if full else 64
    checked = 0
    bucket_docs = []
    counterexample = None
    for key in sorted(buckets, key=lambda c: (c.valency, c.counts)):
        members = buckets[key]
        doc = {"census": key.to_json(), "graphs": sum(len(o.members) for _, o in members), "orbits": []}
        for rep, orb in members:
            n_checked, last = _orbit_witnesses(aut, rep, orb, limit)
            checked += n_checked
            od = {"alpha": rep.index, "kind": orb.kind, "size": len(orb.members),
                  "representative": _subset_json(grp, rep, orb.members[0])["S"]}
            if last is not None:
                od["sample_witness"] = {"to": [grp.cycles(s) for s in last.rhs.members], **last.to_json()}
            doc["orbits"].append(od)
        bucket_docs.append(doc)
        if len(members) > 1 and counterexample is None:
            (r1, o1), (r2, o2) = members[0], members[1]
            s1 = validate_subset(r1.alpha, o1.members[0])
            s2 = validate_subset(r2.alpha, o2.members[0])
            if gci_equivalence_witness(aut, s1, s2) is not None:
                raise RuntimeError("distinct l_alpha orbits are GCI-equivalent; orbit computation is wrong")
            counterexample = {
                "census": key.to_json(),
                "lhs": _subset_json(grp, r1, o1.members[0]),
                "rhs": _subset_json(grp, r2, o2.members[0]),
                "alphas_conjugate": r1.index == r2.index,
                "witness": None,
            }
    timing["witnesses"] = time.perf_counter() - t0

    rep_docs = [{"index": r.index, "kind": r.kind, "automorphism": r.describe(),
                 "class_size": r.class_size, "centralizer_order": r.stab.order,
                 "fixed": int(r.signed.fixed.size), "inverted": int(r.signed.inverted.size),
                 "omega": int(r.signed.omega.size), "singletons": int(r.signed.singletons.size)}
                for r in reps]
    return LocalGciReport(grp.name, m, "extended" if entry.extended else "default",
                          counterexample is None, rep_docs, bucket_docs, counterexample, checked, timing)


@dataclass
class Not1GciReport:
    group: str
    x: str
    census_cayley: CycleCensus
    census_inner: CycleCensus
    witness: GciWitness | None

    @property
    def passed(self) -> bool:
        return self.census_cayley == self.census_inner and self.witness is None

    def to_json(self) -> dict:
        return {"group": self.group, "x": self.x,
                "census_identity": self.census_cayley.to_json(),
                "census_sigma_x": self.census_inner.to_json(),
                "witness": None if self.witness is None else self.witness.to_json(),
                "verdict": "not-1-GCI" if self.passed else "inconclusive"}


def verify_not_1gci(entry) -> Not1GciReport:
    """``GC(G, {x}, 1)`` and ``GC(G, {x}, sigma_x)`` are isomorphic but not GCI-equivalent."""
    grp, aut = entry.group, entry.aut
    x = int(grp.involutions()[0])
    s_id = validate_subset(identity_automorphism(grp), (x,))
    s_in = validate_subset(inner(grp, x), (x,))
    if grp.order <= 10**5:
        c1, c2 = cycle_census(build_graph(s_id)), cycle_census(build_graph(s_in))
    else:
        c1, c2 = census(s_id), census(s_in)
    w = gci_equivalence_witness(aut, s_id, s_in)
    return Not1GciReport(grp.name, grp.cycles(x), c1, c2, w)
