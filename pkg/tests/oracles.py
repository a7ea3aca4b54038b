"""Independent brute-force oracles used to freeze expected test values.

Deliberately naive and self-contained: nothing here imports the package
under test, so every comparison in the suite is a genuine cross-check.
Graphs are represented as (vertices, edges) with edges a set of frozensets.
"""

from itertools import combinations


def brute_primes(limit):
    out = []
    for n in range(2, limit + 1):
        if all(n % p for p in out if p * p <= n):
            out.append(n)
    return out


def brute_factor(n):
    """Trial division only; returns sorted (prime, exponent) pairs."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return sorted(out.items())


def brute_order(base, mod):
    """Multiplicative order of base modulo mod by repeated multiplication."""
    b = base % mod
    if b == 0:
        raise ValueError("not coprime")
    acc = 1
    for k in range(1, mod):
        acc = acc * b % mod
        if acc == 1:
            return k
    raise ValueError("no order found")


def convention_order(r, n):
    """e(r, n): the true order for odd r, the residue-class rule for r = 2."""
    if r == 2:
        return 1 if n % 4 == 1 else 2
    return brute_order(n, r)


def brute_ppd(i, n, prime_limit=300000):
    """R_i(n) by scanning prime divisors of n^i - 1 directly."""
    value = abs(n**i - 1)
    out = set()
    for p, _ in brute_factor(value):
        if p == 2:
            if n % 2 and convention_order(2, n) == i:
                out.add(2)
        elif n % p and brute_order(n, p) == i:
            out.add(p)
    return out


def adjacency(vertices, edges):
    adj = {v: set() for v in vertices}
    for e in edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    return adj


def brute_is_split(vertices, edges):
    """Split check by trying every clique/independent bipartition."""
    vs = list(vertices)
    adj = adjacency(vs, edges)
    for size in range(len(vs) + 1):
        for clique in combinations(vs, size):
            cs = set(clique)
            if any(v not in adj[u] for u, v in combinations(clique, 2)):
                continue
            rest = [v for v in vs if v not in cs]
            if all(v not in adj[u] for u, v in combinations(rest, 2)):
                return True
    return False


def brute_has_forbidden(vertices, edges):
    """True iff some 4/5-subset induces 2K2, C4 or C5."""
    vs = list(vertices)
    adj = adjacency(vs, edges)

    def induced_edge_count(sub):
        return sum(1 for u, v in combinations(sub, 2) if v in adj[u])

    for sub in combinations(vs, 4):
        cnt = induced_edge_count(sub)
        degs = sorted(sum(1 for w in sub if w != v and w in adj[v]) for v in sub)
        if cnt == 2 and degs == [1, 1, 1, 1]:
            return True
        if cnt == 4 and degs == [2, 2, 2, 2]:
            return True
    for sub in combinations(vs, 5):
        cnt = induced_edge_count(sub)
        degs = [sum(1 for w in sub if w != v and w in adj[v]) for v in sub]
        if cnt == 5 and all(d == 2 for d in degs):
            return True
    return False


def brute_chromatic(vertices, edges):
    """Chromatic number by exhaustive k-coloring, for small graphs."""
    vs = list(vertices)
    adj = adjacency(vs, edges)
    n = len(vs)
    if n == 0:
        return 0

    def colorable(k):
        coloring = {}

        def place(i):
            if i == n:
                return True
            v = vs[i]
            for c in range(k):
                if all(coloring.get(u) != c for u in adj[v]):
                    coloring[v] = c
                    if place(i + 1):
                        return True
                    del coloring[v]
            return False

        return place(0)

    for k in range(1, n + 1):
        if colorable(k):
            return k
    raise AssertionError("unreachable")


def graphs_on(n):
    """All labeled graphs on vertices 0..n-1 as edge sets."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
