"""Slow, independent reference computations used only by the tests."""
import itertools
from collections import deque


def closure(gens):
    """All products of the generators, as image tuples (BFS over words)."""
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    todo = deque([ident])
    while todo:
        p = todo.popleft()
        for g in gens:
            q = tuple(g[p[i]] for i in range(n))
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return seen


def compose(p, q):
    return tuple(q[p[i]] for i in range(len(p)))


def inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def parity(p):
    seen, sign = set(), 0
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        sign += length - 1
    return sign % 2


def conj(a, b):
    """b a b^-1 with left-to-right products."""
    return compose(compose(b, a), inverse(b))


def symmetric_group(n):
    return [tuple(p) for p in itertools.permutations(range(n))]


def conjugacy_class_sizes(elements):
    elements = list(elements)
    left = set(elements)
    sizes = []
    while left:
        a = next(iter(left))
        cls = {conj(a, b) for b in elements}
        sizes.append(len(cls))
        left -= cls
    return sorted(sizes)


def components(n, neighbours):
    """Component sizes of an undirected graph given by a neighbour function."""
    seen = [False] * n
    sizes = []
    for v in range(n):
        if seen[v]:
            continue
        stack, size = [v], 0
        seen[v] = True
        while stack:
            u = stack.pop()
            size += 1
            for w in neighbours(u):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        sizes.append(size)
    return sorted(sizes)
