"""Independent oracles the test suite checks the package against.

Everything here is deliberately written from first principles with
different algorithms than the package uses: counting DPs instead of
enumeration, plain backtracking instead of colour refinement, numerical
integration instead of closed-form constants.  Slow but obviously correct.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations, permutations


# ---------------------------------------------------------------------------
# labelled regular-graph counting (checks cubic_graphs completeness)


def labelled_regular_count(n: int, d: int) -> int:
    """Number of labelled simple d-regular graphs on n vertices.

    Dynamic program over residual-degree multisets: repeatedly connect one
    vertex of maximal residual to a choice of partners.  Within a residual
    class the vertices are interchangeable for counting purposes, so the
    state is just the sorted residual tuple.
    """

    @lru_cache(maxsize=None)
    def count(state: tuple[int, ...]) -> int:
        state = tuple(x for x in state if x > 0)
        if not state:
            return 1
        r = state[0]  # sorted descending: state[0] is a maximal residual
        rest = list(state[1:])
        if r > len(rest):
            return 0
        # group the remaining residuals by value
        classes: dict[int, int] = {}
        for x in rest:
            classes[x] = classes.get(x, 0) + 1
        values = sorted(classes)
        total = 0

        def assign(idx: int, left: int, ways: int, taken: dict):
            nonlocal total
            if idx == len(values):
                if left == 0:
                    new = []
                    for v in values:
                        k = taken[v]
                        new.extend([v - 1] * k)
                        new.extend([v] * (classes[v] - k))
                    total += ways * count(tuple(sorted(new, reverse=True)))
                return
            v = values[idx]
            for k in range(0, min(classes[v], left) + 1):
                taken[v] = k
                assign(idx + 1, left - k, ways * math.comb(classes[v], k), taken)
            taken.pop(v, None)

        assign(0, r, 1, {})
        return total

    return count(tuple([d] * n))


def connected_cubic_labelled_count(n: int) -> int:
    """Number of labelled connected cubic graphs on n vertices (sieve)."""

    @lru_cache(maxsize=None)
    def all_count(k: int) -> int:
        if k == 0:
            return 1
        if k < 4 or k % 2:
            return 0
        return labelled_regular_count(k, 3)

    @lru_cache(maxsize=None)
    def conn(k: int) -> int:
        if k < 4 or k % 2:
            return 0
        # split off the component containing vertex 1
        total = all_count(k)
        for j in range(4, k, 2):
            total -= math.comb(k - 1, j - 1) * conn(j) * all_count(k - j)
        return total

    return conn(n)


# ---------------------------------------------------------------------------
# brute-force cubic-graph class enumeration (n <= 10)


def _dist_invariant(n: int, adj: dict[int, set[int]]) -> tuple:
    profiles = []
    for v in range(n):
        dist = {v: 0}
        frontier = [v]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for x in frontier:
                for w in adj[x]:
                    if w not in dist:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        profiles.append(tuple(sorted(dist.get(w, n) for w in range(n))))
    return tuple(sorted(profiles))


def _plain_iso(n: int, adj1: dict[int, set[int]], adj2: dict[int, set[int]]) -> bool:
    """Plain backtracking isomorphism test on two cubic graphs."""

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def place(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if w in used:
                continue
            ok = True
            for u, x in mapping.items():
                if (u in adj1[v]) != (x in adj2[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if place(v + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return place(0)


def dfs_cubic_class_count(n: int) -> tuple[int, int]:
    """(connected labelled count with N(0)={1,2,3}, connected class count).

    Exhaustive DFS over labelled cubic graphs whose vertex 0 is adjacent to
    exactly 1, 2, 3 (every isomorphism class admits such a labelling);
    classes separated by distance invariants plus plain backtracking.
    """
    assert n in (4, 6, 8, 10)
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for w in (1, 2, 3):
        adj[0].add(w)
        adj[w].add(0)

    reps: dict[tuple, list[dict[int, set[int]]]] = {}
    labelled = 0

    def connected() -> bool:
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n

    def record():
        nonlocal labelled
        if not connected():
            return
        labelled += 1
        inv = _dist_invariant(n, adj)
        bucket = reps.setdefault(inv, [])
        frozen = {v: set(adj[v]) for v in range(n)}
        for r in bucket:
            if _plain_iso(n, frozen, r):
                return
        bucket.append(frozen)

    def rec():
        v = next((x for x in range(n) if len(adj[x]) < 3), None)
        if v is None:
            record()
            return
        need = 3 - len(adj[v])
        candidates = [
            w for w in range(v + 1, n) if w not in adj[v] and len(adj[w]) < 3
        ]
        for chosen in combinations(candidates, need):
            for w in chosen:
                adj[v].add(w)
                adj[w].add(v)
            rec()
            for w in chosen:
                adj[v].discard(w)
                adj[w].discard(v)

    rec()
    classes = sum(len(b) for b in reps.values())
    return labelled, classes


def oracle_adjacency(g) -> dict[int, set[int]]:
    """Adjacency sets of a package graph, relabelled to 0..n-1."""
    verts = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    adj: dict[int, set[int]] = {i: set() for i in range(len(verts))}
    for (a, b, _) in g.edges:
        adj[idx[a]].add(idx[b])
        adj[idx[b]].add(idx[a])
    return adj


# ---------------------------------------------------------------------------
# brute-force triangulation automorphisms (<= 4 simplices)


def brute_force_tri_automorphisms(t) -> list[tuple[tuple, tuple]]:
    """All automorphisms of a small triangulation by exhaustive search.

    Returns (simplex_map, vertex_maps) pairs in TriAutomorphism layout.
    Checks every pairing and free facet against every candidate assignment;
    no refinement, no propagation.
    """
    n = t.simplex_count
    s5 = [(0,) + p for p in permutations((1, 2, 3, 4, 5))]
    frees = set(t.free_facets)

    def consistent(assign: dict) -> bool:
        for p in t.pairings:
            (k, i), (l, j) = p.side_a, p.side_b
            if k not in assign or l not in assign:
                continue
            lk, sk = assign[k]
            ll, sl = assign[l]
            image = t.partner(lk, sk[i])
            if image is None:
                return False
            l2, j2, fmap2 = image
            if l2 != ll or j2 != sl[j]:
                return False
            pd = p.as_dict()
            for v in range(1, 6):
                if v == i:
                    continue
                if fmap2[sk[v]] != sl[pd[v]]:
                    return False
        for (k, i) in frees:
            if k in assign:
                lk, sk = assign[k]
                if (lk, sk[i]) not in frees:
                    return False
        return True

    results = []

    def rec(k: int, assign: dict, used: set):
        if k == n:
            smap = tuple(assign[x][0] for x in range(n))
            vmaps = tuple(assign[x][1] for x in range(n))
            results.append((smap, vmaps))
            return
        for l in range(n):
            if l in used:
                continue
            for sigma in s5:
                assign[k] = (l, sigma)
                if consistent(assign):
                    rec(k + 1, assign, used | {l})
                del assign[k]

    rec(0, {}, set())
    return results


# ---------------------------------------------------------------------------
# 1-factorizations of K6


def k6_perfect_matchings() -> list[frozenset]:
    """All 15 perfect matchings of the complete graph on {0..5}."""
    out = []

    def rec(free: tuple, edges: frozenset):
        if not free:
            out.append(edges)
            return
        a = free[0]
        for b in free[1:]:
            rest = tuple(x for x in free if x not in (a, b))
            rec(rest, edges | {frozenset((a, b))})

    rec(tuple(range(6)), frozenset())
    return out


def k6_labelled_factorizations() -> list[tuple]:
    """All ordered 5-tuples of pairwise disjoint perfect matchings of K6."""
    pms = k6_perfect_matchings()
    out = []

    def rec(chosen: list, used: frozenset):
        if len(chosen) == 5:
            out.append(tuple(chosen))
            return
        for pm in pms:
            if pm & used:
                continue
            chosen.append(pm)
            rec(chosen, used | pm)
            chosen.pop()

    rec([], frozenset())
    return out


def factorization_orbit(start: tuple) -> set[tuple]:
    """Closure of one labelled factorization under vertex transpositions
    (relabelling all matchings) and colour transpositions (swapping two
    positions in the tuple)."""

    def relabel(fac: tuple, a: int, b: int) -> tuple:
        sw = {a: b, b: a}
        return tuple(
            frozenset(frozenset(sw.get(v, v) for v in e) for e in pm) for pm in fac
        )

    seen = {start}
    queue = [start]
    while queue:
        fac = queue.pop()
        neighbours = []
        for a, b in combinations(range(6), 2):
            neighbours.append(relabel(fac, a, b))
        for a, b in combinations(range(5), 2):
            lst = list(fac)
            lst[a], lst[b] = lst[b], lst[a]
            neighbours.append(tuple(lst))
        for nb in neighbours:
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return seen


# ---------------------------------------------------------------------------
# numeric volume oracle


def _zeta_even(j: int, terms: int = 200000) -> float:
    return sum(1.0 / k ** (2 * j) for k in range(1, terms))


def lobachevsky(theta: float, eps: float = 0.05, steps: int = 20001) -> float:
    """The volume function -integral of log|2 sin t| from 0 to theta.

    The log singularity at 0 is handled by the series expansion of
    log(sin t / t); the smooth remainder uses composite Simpson.
    """
    assert 0 < eps < theta
    # integral of log(2t) on [0, eps]
    head = eps * (math.log(2 * eps) - 1)
    # integral of log(sin t / t) = -sum_j zeta(2j) eps^(2j+1) / (j (2j+1) pi^(2j))
    for j in range(1, 10):
        head -= _zeta_even(j, 20000) * eps ** (2 * j + 1) / (
            j * (2 * j + 1) * math.pi ** (2 * j)
        )

    def f(t: float) -> float:
        return math.log(2.0 * math.sin(t))

    if steps % 2 == 0:
        steps += 1
    h = (theta - eps) / (steps - 1)
    acc = f(eps) + f(theta)
    for i in range(1, steps - 1):
        acc += (4 if i % 2 else 2) * f(eps + i * h)
    tail = acc * h / 3.0
    return -(head + tail)


def ideal_tetrahedron_volume_oracle() -> float:
    """Volume of the regular ideal hyperbolic tetrahedron, numerically."""
    return 3.0 * lobachevsky(math.pi / 3.0)
