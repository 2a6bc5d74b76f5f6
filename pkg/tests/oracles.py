"""Independent brute-force oracles for pinning expected values.

Everything here is deliberately naive: straight enumeration over all
candidates with no pruning, and no shared logic with the library beyond
the Graph container itself. Slow but obviously correct at the sizes the
tests use.
"""

import itertools
import random

from zdg import Graph


def brute_chromatic_number(g) -> int:
    """Smallest k admitting a proper coloring, by trying every assignment."""
    n = g.n
    if n == 0:
        return 0
    pos_edges = [
        (g.position(u), g.position(v)) for u, v in g.edges()
    ]
    for k in range(1, n + 1):
        for colors in itertools.product(range(k), repeat=n):
            if all(colors[a] != colors[b] for a, b in pos_edges):
                return k
    raise AssertionError("n colors always suffice")


def brute_clique_number(g) -> int:
    """Largest all-adjacent vertex subset, by checking every subset."""
    verts = list(g.vertices)
    for k in range(g.n, 1, -1):
        for comb in itertools.combinations(verts, k):
            if all(
                g.has_edge(u, v) for u, v in itertools.combinations(comb, 2)
            ):
                return k
    return 1 if verts else 0


def brute_girth(g):
    """Shortest cycle length by checking every cyclic vertex arrangement."""
    verts = list(g.vertices)
    for k in range(3, g.n + 1):
        for comb in itertools.combinations(verts, k):
            first, rest = comb[0], comb[1:]
            for perm in itertools.permutations(rest):
                if perm[0] > perm[-1]:
                    continue  # each cycle read in one direction only
                cyc = (first,) + perm
                if all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                    return k
    return float("inf")


def random_graph(rng: random.Random, max_n: int = 8) -> Graph:
    n = rng.randint(0, max_n)
    p = rng.random()
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(range(n), edges)


def naive_zero_tables(n):
    """Every commutative zero-absorbing associative table of order n.

    Generate-and-filter with an inline associativity loop, kept free of
    the library's validation code on purpose.
    """
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    for vals in itertools.product(range(n), repeat=len(cells)):
        t = [[0] * n for _ in range(n)]
        for (i, j), v in zip(cells, vals):
            t[i][j] = v
            t[j][i] = v
        ok = True
        for x in range(1, n):
            for y in range(1, n):
                row = t[x][y]
                for z in range(1, n):
                    if t[row][z] != t[x][t[y][z]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            yield tuple(tuple(r) for r in t)
