"""Instance generators shared by the module tests and the acceptance suite."""
import numpy as np

from gcilab.autgroup import inner, signed_fix_data
from gcilab.gci import ElementPair, ell


def random_witness_instances(entry, count, seed=0):
    """Yield ``(alpha, a, b, g, gamma)`` with ``b = l_alpha(a; g, gamma)`` and alpha inner."""
    grp, aut = entry.group, entry.aut
    rng = np.random.default_rng(seed)
    invs = grp.involutions()
    cache = {}
    for _ in range(count):
        x = int(rng.choice(invs))
        if x not in cache:
            alpha = inner(grp, x)
            omega = np.zeros(grp.order, dtype=bool)
            omega[signed_fix_data(alpha).omega] = True
            cache[x] = (alpha, np.nonzero(~omega)[0], aut.centralizer(x, 0))
        alpha, outside, cent = cache[x]
        a = int(rng.choice(outside))
        g = int(rng.integers(grp.order))
        ks, t = cent[int(rng.integers(len(cent)))]
        gamma = aut.automorphism(int(ks[int(rng.integers(len(ks)))]), t)
        b = int(ell(alpha, a, g, gamma))
        yield alpha, a, b, g, gamma


def alpha_pair(alpha, a):
    g = alpha.group
    return ElementPair.of(a, alpha(g.inv[a]))
