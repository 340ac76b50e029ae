"""Finite groups given by multiplication tables, and their Cayley graphs.

A group is stored as a full multiplication table over elements 0..n-1 with
0 as the identity, plus a distinguished generating tuple.  Construction
helpers build groups from permutation generators (closing under products),
from JSON files, and from a few named families used in the tests.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations as iter_permutations

from .errors import CapExceededError, ParseError
from .graphs import LabeledDigraph

GROUP_ORDER_CAP = 10000


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group on elements 0..n-1 with identity 0.

    ``table[a][b]`` is the product a*b.  ``generators`` is a tuple of
    non-identity elements that generate the group; Cayley-graph edges use
    them in the given order.
    """

    table: tuple[tuple[int, ...], ...]
    generators: tuple[int, ...]

    def __post_init__(self):
        n = len(self.table)
        if n == 0:
            raise ValueError("empty group")
        if n > GROUP_ORDER_CAP:
            raise CapExceededError(f"group order {n} exceeds cap {GROUP_ORDER_CAP}")
        for row in self.table:
            if len(row) != n or sorted(row) != list(range(n)):
                raise ValueError("multiplication table rows must be permutations")
        cols = list(zip(*self.table))
        for col in cols:
            if sorted(col) != list(range(n)):
                raise ValueError("multiplication table columns must be permutations")
        if any(self.table[0][b] != b for b in range(n)) or any(
            self.table[a][0] != a for a in range(n)
        ):
            raise ValueError("element 0 must be the identity")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise ValueError("multiplication is not associative")
        for g in self.generators:
            if not 0 < g < n:
                raise ValueError("generators must be non-identity elements")
        if self._span(self.generators) != set(range(n)):
            raise ValueError("given generators do not generate the group")

    def _span(self, gens: tuple[int, ...]) -> set[int]:
        span = {0}
        frontier = [0]
        while frontier:
            a = frontier.pop()
            for s in gens:
                b = self.table[a][s]
                if b not in span:
                    span.add(b)
                    frontier.append(b)
        return span

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(0)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def minimal_generator_count(self) -> int:
        """Size of a smallest generating set (brute force; small groups only)."""
        if self.order == 1:
            return 0
        elems = list(range(1, self.order))
        from itertools import combinations

        for k in range(1, len(elems) + 1):
            for combo in combinations(elems, k):
                if self._span(combo) == set(range(self.order)):
                    return k
        raise AssertionError("unreachable: the full element set generates")

    def isomorphism_to(self, other: "FiniteGroup") -> dict[int, int] | None:
        """An isomorphism self -> other as a dict, or None.

        Backtracks over images of self's generators, pruning by element
        order, then verifies the induced map on all of self.
        """
        if self.order != other.order:
            return None
        my_orders = sorted(self.element_order(a) for a in range(self.order))
        other_orders = sorted(other.element_order(a) for a in range(other.order))
        if my_orders != other_orders:
            return None
        gens = self.generators
        by_order: dict[int, list[int]] = {}
        for b in range(other.order):
            by_order.setdefault(other.element_order(b), []).append(b)

        def words(images: list[int]) -> dict[int, int] | None:
            # expand the generator images to a full map by parallel BFS
            fmap = {0: 0}
            frontier = [0]
            while frontier:
                a = frontier.pop()
                for s, t in zip(gens, images):
                    b = self.table[a][s]
                    fb = other.table[fmap[a]][t]
                    if b in fmap:
                        if fmap[b] != fb:
                            return None
                    else:
                        fmap[b] = fb
                        frontier.append(b)
            if len(fmap) != self.order or len(set(fmap.values())) != self.order:
                return None
            for a in range(self.order):
                for b in range(self.order):
                    if fmap[self.table[a][b]] != other.table[fmap[a]][fmap[b]]:
                        return None
            return fmap

        def assign(i: int, images: list[int]) -> dict[int, int] | None:
            if i == len(gens):
                return words(images)
            want = self.element_order(gens[i])
            for cand in by_order.get(want, []):
                result = assign(i + 1, images + [cand])
                if result is not None:
                    return result
            return None

        return assign(0, [])


def group_from_permutations(perms: list, degree: int | None = None) -> FiniteGroup:
    """The permutation group generated by ``perms``.

    Each generator may be a dict, a one-line image list (0-based), or a
    cycle-notation string like ``"(1 2 3)(4 5)"`` (1-based points).  The
    group elements are numbered by BFS from the identity, so 0 is the
    identity and the input generators appear among the element numbers.
    """
    parsed = [_parse_permutation(p, degree) for p in perms]
    if not parsed:
        raise ValueError("need at least one generator")
    deg = max(len(p) for p in parsed)
    parsed = [_pad(p, deg) for p in parsed]
    ident = tuple(range(deg))
    elems: list[tuple[int, ...]] = [ident]
    index = {ident: 0}
    queue = [ident]
    while queue:
        p = queue.pop(0)
        for q in parsed:
            r = tuple(q[p[i]] for i in range(deg))  # apply p first, then q
            if r not in index:
                if len(elems) >= GROUP_ORDER_CAP:
                    raise CapExceededError(
                        f"generated group exceeds cap {GROUP_ORDER_CAP}"
                    )
                index[r] = len(elems)
                elems.append(r)
                queue.append(r)
    n = len(elems)
    table = tuple(
        tuple(index[tuple(elems[b][elems[a][i]] for i in range(deg))] for b in range(n))
        for a in range(n)
    )
    gens = tuple(index[_pad(p, deg)] for p in parsed if index[_pad(p, deg)] != 0)
    if not gens:
        gens = ()
    g = FiniteGroup(table, gens if gens else tuple())
    return g


def _pad(p: tuple[int, ...], deg: int) -> tuple[int, ...]:
    return tuple(list(p) + list(range(len(p), deg)))


def _parse_permutation(p, degree: int | None) -> tuple[int, ...]:
    if isinstance(p, dict):
        pts = max(p.keys(), default=-1) + 1
        out = list(range(pts))
        for k, v in p.items():
            out[k] = v
    elif isinstance(p, str):
        out = _parse_cycles(p, degree)
    else:
        out = list(p)
    if sorted(out) != list(range(len(out))):
        raise ValueError(f"not a permutation: {p!r}")
    return tuple(out)


def _parse_cycles(s: str, degree: int | None) -> list[int]:
    """Parse ``"(1 2 3)(4 5)"`` with 1-based points; commas also allowed."""
    s = s.strip()
    if s in ("()", "e", "id", ""):
        return list(range(degree or 1))
    cycles = []
    depth = 0
    cur: list[str] = []
    for ch in s:
        if ch == "(":
            if depth:
                raise ValueError(f"nested parenthesis in {s!r}")
            depth = 1
            cur = []
        elif ch == ")":
            if not depth:
                raise ValueError(f"unbalanced parenthesis in {s!r}")
            depth = 0
            toks = "".join(cur).replace(",", " ").split()
            if toks:
                cycles.append([int(t) for t in toks])
        elif depth:
            cur.append(ch)
        elif not ch.isspace():
            raise ValueError(f"unexpected character {ch!r} in {s!r}")
    if depth:
        raise ValueError(f"unbalanced parenthesis in {s!r}")
    pts = [p for c in cycles for p in c]
    if len(set(pts)) != len(pts):
        raise ValueError(f"repeated point in {s!r}")
    if any(p < 1 for p in pts):
        raise ValueError(f"points are 1-based in {s!r}")
    n = max([degree or 0] + pts)
    out = list(range(n))
    for c in cycles:
        for i, p in enumerate(c):
            out[p - 1] = c[(i + 1) % len(c)] - 1
    return out


def group_from_table(table: list[list[int]], generators: list[int]) -> FiniteGroup:
    return FiniteGroup(tuple(tuple(row) for row in table), tuple(generators))


def load_group_json(text: str) -> FiniteGroup:
    """Load a group from JSON: permutation generators or an explicit table.

    Accepted shapes::

        {"permutations": ["(1 2 3)", [1, 0, 2], ...]}
        {"table": [[0, 1], [1, 0]], "generators": [1]}

    Permutation lists of integers are 1-based image lists (value i means
    point i), matching cycle notation; 0-based lists are detected by the
    presence of 0.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    if "permutations" in data:
        perms = data["permutations"]
        if not isinstance(perms, list) or not perms:
            raise ParseError("'permutations' must be a non-empty list")
        norm = []
        for p in perms:
            if isinstance(p, list):
                if not all(isinstance(x, int) for x in p):
                    raise ParseError("permutation lists must contain integers")
                if 0 in p:
                    norm.append(p)  # already 0-based
                else:
                    norm.append([x - 1 for x in p])
            elif isinstance(p, str):
                norm.append(p)
            else:
                raise ParseError("permutations must be strings or integer lists")
        try:
            return group_from_permutations(norm)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    if "table" in data:
        table = data["table"]
        gens = data.get("generators")
        if gens is None:
            raise ParseError("'table' form requires 'generators'")
        try:
            return group_from_table(table, gens)
        except (ValueError, TypeError) as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError("expected 'permutations' or 'table'")


def cayley_graph(group: FiniteGroup) -> LabeledDigraph:
    """Right-multiplication Cayley graph with labels ``s1..sm``.

    Vertices are the element numbers 0..n-1; for each element g and each
    generator s_i there is one edge g -> g*s_i labelled ``s{i}``.  The
    label-preserving automorphisms are exactly the left translations, so the
    graph's symmetry group is the group itself.
    """
    n = group.order
    m = len(group.generators)
    if m == 0:
        raise ValueError("group needs at least one generator for a Cayley graph")
    labels = tuple(f"s{i}" for i in range(1, m + 1))
    edges = []
    for g in range(n):
        for i, s in enumerate(group.generators, start=1):
            edges.append((g, group.table[g][s], f"s{i}"))
    return LabeledDigraph(tuple(range(n)), tuple(edges), labels, False)


def generator_count_bound(n: int) -> int:
    """Upper bound floor(log2 n) on the generators needed for order n > 1.

    Any chain of proper subgroups 1 < H_1 < ... < H_k = G at least doubles
    the order at each step, so a greedy generating set has at most log2(n)
    members; the bound is attained by elementary abelian 2-groups.
    """
    if n < 1:
        raise ValueError("group order must be positive")
    if n == 1:
        return 0
    return n.bit_length() - 1


# -- named groups used in tests and demos -----------------------------------


def cyclic_group(n: int) -> FiniteGroup:
    """Z/n with generator 1."""
    if n < 2:
        raise ValueError("need n >= 2")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(table, (1,))


def klein_four_group() -> FiniteGroup:
    """Z/2 x Z/2 with two generators."""
    return group_from_permutations(["(1 2)", "(3 4)"])


def symmetric_group_3() -> FiniteGroup:
    """S3 generated by a transposition and a 3-cycle."""
    return group_from_permutations(["(1 2)", "(1 2 3)"])
