"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Trees are found as connected (n-1)-edge subsets of K_n; nothing here uses
Prüfer codes or closed-form counts.
"""
import itertools
import sys

import networkx as nx


def trees(n):
    edges = list(itertools.combinations(range(1, n + 1), 2))
    out = []
    for sub in itertools.combinations(edges, n - 1):
        g = nx.Graph()
        g.add_nodes_from(range(1, n + 1))
        g.add_edges_from(sub)
        if nx.is_connected(g):
            out.append(frozenset(sub))
    return out


def is_star(n, t):
    deg = {}
    for u, v in t:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return max(deg.values()) == n - 1


def forests(n, size):
    edges = list(itertools.combinations(range(1, n + 1), 2))
    for sub in itertools.combinations(edges, size):
        if nx.is_forest(nx.Graph(list(sub))):
            yield frozenset(sub)


def blocked(n, t):
    ts = trees(n)
    best = None
    for f in forests(n, t):
        containing = [x for x in ts if f <= x]
        for t0 in ts:
            if is_star(n, t0) or len(t0 & f) >= t:
                continue
            out = t0 - f
            value = sum(1 for x in containing if not (x & out))
            if best is None or value < best:
                best = value
    return best


def alpha(n, t):
    ts = trees(n)
    g = nx.Graph()
    g.add_nodes_from(range(len(ts)))
    for i in range(len(ts)):
        for j in range(i + 1, len(ts)):
            if len(ts[i] & ts[j]) >= t:
                g.add_edge(i, j)  # compatible pair: clique in this graph = t-intersecting family
    clique, weight = nx.max_weight_clique(g, weight=None)
    return weight


def omega(n, t):
    ts = trees(n)
    g = nx.Graph()
    g.add_nodes_from(range(len(ts)))
    for i in range(len(ts)):
        for j in range(i + 1, len(ts)):
            if len(ts[i] & ts[j]) < t:
                g.add_edge(i, j)
    clique, weight = nx.max_weight_clique(g, weight=None)
    return weight


if __name__ == "__main__":
    what = sys.argv[1]
    args = [int(a) for a in sys.argv[2:]]
    if what != "blocked_fast":
        print({"blocked": blocked, "alpha": alpha, "omega": omega}[what](*args))


def blocked_fast(n, t):
    """Same as blocked() with numpy bitmasks, for n = 7."""
    import numpy as np

    edges = list(itertools.combinations(range(1, n + 1), 2))
    bit = {e: 1 << i for i, e in enumerate(edges)}
    ts = trees(n)
    masks = np.array([sum(bit[e] for e in x) for x in ts], dtype=np.int64)
    star = np.array([is_star(n, x) for x in ts])
    best = None
    for f in forests(n, t):
        fm = sum(bit[e] for e in f)
        containing = masks[(masks & fm) == fm]
        for t0m, s in zip(masks.tolist(), star.tolist()):
            if s or bin(t0m & fm).count("1") >= t:
                continue
            out = t0m & ~fm
            value = int(((containing & out) == 0).sum())
            if best is None or value < best:
                best = value
    return best


if __name__ == "__main__" and sys.argv[1] == "blocked_fast":
    print(blocked_fast(int(sys.argv[2]), int(sys.argv[3])))
