"""Derive permutation data for catalog groups whose generators are not printed.

Run once; the output blocks are pasted into src/gcilab/data/catalog.txt,
where every entry is re-verified on load.
"""
import sys

import numpy as np

from gcilab.permgroup import Group, Permutation, parse_cycles
from gcilab.autgroup import AutGroup, conjugation_by, from_generator_images, inner_element


# -- GF(8) with modulus x^3 + x + 1 --------------------------------------------

def gf8_mul(a, b):
    r = 0
    for i in range(3):
        if b >> i & 1:
            r ^= a << i
    for i in (4, 3):
        if r >> i & 1:
            r ^= 0b1011 << (i - 3)
    return r


def gf8_pow(a, k):
    r = 1
    for _ in range(k):
        r = gf8_mul(r, a)
    return r


def gf8_inv(a):
    return next(b for b in range(1, 8) if gf8_mul(a, b) == 1)


def l28():
    inf = 8
    pts = list(range(9))

    def mobius(f):
        return Permutation(tuple(f(p) for p in pts))

    w = 2  # the class of x, a primitive element
    shift = mobius(lambda z: inf if z == inf else z ^ 1)
    scale = mobius(lambda z: inf if z == inf else gf8_mul(w, z))
    invert = mobius(lambda z: 0 if z == inf else (inf if z == 0 else gf8_inv(z)))
    frob = mobius(lambda z: inf if z == inf else gf8_mul(z, z))
    gens = [shift * scale, invert]
    G = Group(gens, "L2(8)")
    assert G.order == 504, G.order
    return gens, [frob]


def sz8():
    def th(x):
        return gf8_pow(x, 4)

    def matmul(A, B):
        n = len(A)
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                s = 0
                for k in range(n):
                    s ^= gf8_mul(A[i][k], B[k][j])
                out[i][j] = s
        return out

    def S(a, b):
        c = gf8_mul(gf8_mul(a, a), th(a)) ^ gf8_mul(a, b) ^ th(b)
        return [[1, 0, 0, 0],
                [a, 1, 0, 0],
                [b, th(a), 1, 0],
                [c, gf8_mul(a, th(a)) ^ b, a, 1]]

    W = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]

    def normalize(v):
        lead = next(x for x in v if x)
        inv = gf8_inv(lead)
        return tuple(gf8_mul(inv, x) for x in v)

    def act(v, M):
        return normalize(tuple(
            (lambda j: __import__('functools').reduce(lambda s, k: s ^ gf8_mul(v[k], M[k][j]), range(4), 0))(j)
            for j in range(4)))

    mats = [S(1, 0), S(2, 0), S(0, 1), S(0, 2), W]
    start = (0, 0, 0, 1)
    orbit = [start]
    seen = {start}
    for v in orbit:
        for M in mats:
            u = act(v, M)
            if u not in seen:
                seen.add(u)
                orbit.append(u)
    print("ovoid orbit", len(orbit), file=sys.stderr)
    idx = {v: i for i, v in enumerate(orbit)}
    perms = [Permutation(tuple(idx[act(v, M)] for v in orbit)) for M in mats]
    frob = Permutation(tuple(idx[normalize(tuple(gf8_mul(x, x) for x in v))] for v in orbit))
    # a diagonal torus element is generated implicitly; check the order
    G = Group(perms, "Sz(8)")
    print("Sz(8) order", G.order, file=sys.stderr)
    return perms, [frob]


def a6_exceptional():
    gens = [parse_cycles("(1 2 3 4 5)", 6), parse_cycles("(4 5 6)", 6)]
    G = Group(gens, "A6")
    assert G.order == 360
    a, b = G.gen_index
    orders = G.element_orders
    cyc3 = [i for i in range(G.order) if orders[i] == 3 and len(G.perm(i).cycles()) == 2]
    fives = np.nonzero(orders == 5)[0]
    ab = G.order_of(G.mul(a, b))
    abb = G.order_of(G.mul(a, G.mul(b, b)))
    for x in fives:
        for y in cyc3:
            if G.order_of(G.mul(x, y)) != ab or G.order_of(G.mul(x, G.mul(y, y))) != abb:
                continue
            try:
                phi = from_generator_images(G, [int(x), int(y)])
            except ValueError:
                continue
            return gens, [conjugation_by(G, "(1 2)"), phi]


def l34():
    x1 = "(1 2)(4 6)(5 7)(8 12)(9 14)(10 15)(11 17)(13 19)"
    x2 = "(2 3 5 4)(6 8 13 9)(7 10 16 11)(12 18)(14 20 21 15)(17 19)"
    beta = ["(1 15)(2 10)(4 17)(5 13)(6 11)(7 19)(8 9)(12 14)",
            "(2 13 16 21)(3 9 11 15)(4 8 10 20)(5 6 7 14)(12 17)(18 19)"]
    gens = [parse_cycles(x1, 21), parse_cycles(x2, 21)]
    G = Group(gens, "L3(4)")
    pb = from_generator_images(G, beta)
    print("paper beta inner?", inner_element(G, pb), "order", pb.order(), file=sys.stderr)
    orders = G.element_orders
    invs = np.nonzero(orders == 2)[0]
    fours = np.nonzero(orders == 4)[0]
    X1, X2 = np.meshgrid(invs, fours, indexing="ij")
    X1, X2 = X1.ravel(), X2.ravel()

    def word_ok(w, k):
        return G.power(w, k) == 0

    m = G.mul
    inv2 = G.inverse(X2)
    x22 = m(X2, X2)
    ok = word_ok(m(X1, X2), 7)
    ok &= word_ok(m(X1, x22), 5)
    ok &= word_ok(m(m(m(X1, X2), X1), x22), 7)
    w = m(m(m(m(m(m(m(X1, X2), X1), X2), X1), x22), X1), inv2)
    ok &= word_ok(w, 5)
    sols = list(zip(X1[ok], X2[ok]))
    print("solutions", len(sols), file=sys.stderr)
    outer = [pb]
    aut = AutGroup(G, outer)
    for s1, s2 in sols:
        if aut.out_order == 12:
            break
        try:
            phi = from_generator_images(G, [int(s1), int(s2)])
        except ValueError:
            continue
        try:
            aut.decompose(phi)
            continue
        except ValueError:
            pass
        outer.append(phi)
        aut = AutGroup(G, outer)
        print("out order now", aut.out_order, file=sys.stderr)
    return gens, outer, G


def fmt_block(name, degree, gens, outer_imgs, order, c2, out, mode, notes=()):
    lines = [f"group {name}"]
    lines += [f"# {n}" for n in notes]
    lines.append(f"degree {degree}")
    lines += [f"gen {g.to_cycles()}" for g in gens]
    for k, imgs in enumerate(outer_imgs, 1):
        lines.append(f"outer {k}: " + " ; ".join(imgs))
    lines += [f"order {order}", f"c2 {c2}", f"out {out}", f"mode {mode}", ""]
    return "\n".join(lines)


def images_of(G, phi):
    return [G.cycles(i) for i in phi.generator_images()]


def images_by_conjugation(gens, t):
    return [(t * g * t.inverse()).to_cycles() for g in gens]


if __name__ == "__main__":
    what = sys.argv[1:]
    if "l28" in what:
        gens, (frob,) = l28()
        print(fmt_block("L2(8)", 9, gens, [images_by_conjugation(gens, frob)], 504, 1, 3, "default"))
    if "sz8" in what:
        gens, (frob,) = sz8()
        print(fmt_block("Sz(8)", 65, gens, [images_by_conjugation(gens, frob)], 29120, 1, 3, "default"))
    if "a6" in what:
        gens, outs = a6_exceptional()
        G = Group(gens)
        print(fmt_block("A6", 6, gens, [images_of(G, o) for o in outs], 360, 1, 4, "default"))
    if "l34" in what:
        gens, outs, G = l34()
        print(fmt_block("L3(4)", 21, gens, [images_of(G, o) for o in outs], 20160, 1, 12, "default"))
