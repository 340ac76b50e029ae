"""Facet-pairing triangulations of 4-simplices and their symmetry groups.

A triangulation is a finite set of 4-simplices, vertices labelled 1..5 and
facets labelled by the opposite vertex, together with simplicial pairings
between facets.  The module provides:

* pairing orientation signs and the orientability certificate,
* automorphism groups and isomorphism testing (colour refinement plus
  propagation along pairings),
* the small building blocks (edge complex, chained edge complexes, vertex
  sub-complex, graph complexes, the one-cusped and doubled examples),
* the two big builders: a closed orientable triangulation whose
  automorphism group realizes a prescribed finite group, and the census
  variant that swaps in graph complexes to produce many non-isomorphic
  triangulations with the same symmetry group,
* a plain-text file format with bit-exact round-tripping.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations as iter_permutations

from .errors import CapExceededError, ParseError
from .graphs import LabeledDigraph, blow_up, strip_labels, isomorphisms as graph_isomorphisms
from .groups import FiniteGroup, cayley_graph

AUT_SIMPLEX_CAP = 2048

VERTICES = (1, 2, 3, 4, 5)


def facet_vertices(i: int) -> tuple[int, ...]:
    """The four vertex labels of the facet opposite vertex i, ascending."""
    return tuple(v for v in VERTICES if v != i)


# ---------------------------------------------------------------------------
# pairings


@dataclass(frozen=True)
class Pairing:
    """A simplicial identification of two distinct facets.

    ``side_a = (k, i)`` and ``side_b = (l, j)`` name facet i of simplex k
    and facet j of simplex l; ``fmap`` is a 6-entry table sending each
    vertex of facet i to a vertex of facet j (entries 0 and i are unused and
    stored as 0).  Stored canonically with side_a <= side_b; the reverse
    direction is the inverse map.
    """

    side_a: tuple[int, int]
    side_b: tuple[int, int]
    fmap: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        (k, i), (l, j) = self.side_a, self.side_b
        if i not in VERTICES or j not in VERTICES:
            raise ValueError("facet labels must be 1..5")
        if self.side_a == self.side_b:
            raise ValueError("a facet cannot pair with itself")
        if self.side_a > self.side_b:
            raise ValueError("pairing not in canonical order; use make_pairing")
        dom = facet_vertices(i)
        img = [self.fmap[v] for v in dom]
        if sorted(img) != list(facet_vertices(j)):
            raise ValueError(f"fmap is not a bijection onto facet {j} vertices")
        if self.fmap[0] != 0 or self.fmap[i] != 0:
            raise ValueError("unused fmap entries must be 0")

    def as_dict(self) -> dict[int, int]:
        return {v: self.fmap[v] for v in facet_vertices(self.side_a[1])}

    def inverse_dict(self) -> dict[int, int]:
        return {self.fmap[v]: v for v in facet_vertices(self.side_a[1])}

    def sides(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.side_a, self.side_b)


def make_pairing(side_a, side_b, vmap: dict[int, int]) -> Pairing:
    """Build a pairing from either direction, canonicalizing the order."""
    side_a = tuple(side_a)
    side_b = tuple(side_b)
    if side_b < side_a:
        side_a, side_b = side_b, side_a
        vmap = {w: v for v, w in vmap.items()}
    fmap = [0] * 6
    for v, w in vmap.items():
        fmap[v] = w
    return Pairing(side_a, side_b, tuple(fmap))


# ---------------------------------------------------------------------------
# triangulations


@dataclass(frozen=True)
class Triangulation:
    """Simplices 0..simplex_count-1 with facet pairings and free facets."""

    simplex_count: int
    pairings: tuple[Pairing, ...]
    free_facets: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pairings", tuple(self.pairings))
        object.__setattr__(
            self, "free_facets", tuple(tuple(f) for f in self.free_facets)
        )
        if self.simplex_count < 1:
            raise ValueError("need at least one simplex")
        seen: set[tuple[int, int]] = set()
        lookup: dict[tuple[int, int], tuple[int, int, dict[int, int]]] = {}
        for p in self.pairings:
            (k, i), (l, j) = p.side_a, p.side_b
            for (s, f) in ((k, i), (l, j)):
                if not 0 <= s < self.simplex_count:
                    raise ValueError(f"simplex id {s} out of range")
                if (s, f) in seen:
                    raise ValueError(f"facet {(s, f)} used twice")
                seen.add((s, f))
            lookup[(k, i)] = (l, j, p.as_dict())
            lookup[(l, j)] = (k, i, p.inverse_dict())
        for (s, f) in self.free_facets:
            if not (0 <= s < self.simplex_count and f in VERTICES):
                raise ValueError(f"bad free facet {(s, f)}")
            if (s, f) in seen:
                raise ValueError(f"facet {(s, f)} both paired and free")
            seen.add((s, f))
        if len(seen) != 5 * self.simplex_count:
            raise ValueError("every facet must be paired or declared free")
        object.__setattr__(self, "_lookup", lookup)

    # -- queries --------------------------------------------------------

    @property
    def simplices(self) -> range:
        return range(self.simplex_count)

    @property
    def is_closed(self) -> bool:
        return not self.free_facets

    def partner(self, k: int, i: int):
        """(l, j, vmap dict) across the pairing at facet i of k, or None."""
        return getattr(self, "_lookup").get((k, i))

    def is_free(self, k: int, i: int) -> bool:
        return (k, i) in set(self.free_facets)

    def self_pairing_count(self, k: int) -> int:
        return sum(1 for p in self.pairings if p.side_a[0] == k and p.side_b[0] == k)

    def free_count(self, k: int) -> int:
        return sum(1 for (s, _) in self.free_facets if s == k)

    def components(self) -> list[tuple[int, ...]]:
        """Connected components of the simplex-adjacency (pairing) graph."""
        adj: dict[int, set[int]] = {k: set() for k in self.simplices}
        for p in self.pairings:
            a, b = p.side_a[0], p.side_b[0]
            adj[a].add(b)
            adj[b].add(a)
        seen: set[int] = set()
        comps = []
        for k in self.simplices:
            if k in seen:
                continue
            comp = {k}
            queue = deque([k])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            comps.append(tuple(sorted(comp)))
        return comps

    # -- serialization ----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"simplices {self.simplex_count}"]
        for p in sorted(self.pairings, key=lambda p: p.side_a):
            (k, i), (l, j) = p.side_a, p.side_b
            imgs = " ".join(str(p.fmap[v]) for v in facet_vertices(i))
            lines.append(f"{k} {i} {l} {j} : {imgs}")
        if self.free_facets:
            lines.append("free")
            for (k, i) in sorted(self.free_facets):
                lines.append(f"{k} {i}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Triangulation":
        count = None
        pairings = []
        frees = []
        in_free = False
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("simplices"):
                parts = line.split()
                if len(parts) != 2 or not parts[1].isdigit():
                    raise ParseError("bad simplices header", lineno)
                count = int(parts[1])
            elif line == "free":
                in_free = True
            elif in_free:
                parts = line.split()
                if len(parts) != 2:
                    raise ParseError("free facet wants 'simplex facet'", lineno)
                try:
                    frees.append((int(parts[0]), int(parts[1])))
                except ValueError as exc:
                    raise ParseError(str(exc), lineno) from exc
            else:
                if ":" not in line:
                    raise ParseError("pairing line needs ':'", lineno)
                head, _, tail = line.partition(":")
                try:
                    k, i, l, j = (int(x) for x in head.split())
                    imgs = [int(x) for x in tail.split()]
                except ValueError as exc:
                    raise ParseError(str(exc), lineno) from exc
                if len(imgs) != 4:
                    raise ParseError("pairing wants 4 image vertices", lineno)
                if i not in VERTICES or j not in VERTICES:
                    raise ParseError("facet labels must be 1..5", lineno)
                vmap = dict(zip(facet_vertices(i), imgs))
                try:
                    pairings.append(make_pairing((k, i), (l, j), vmap))
                except ValueError as exc:
                    raise ParseError(str(exc), lineno) from exc
        if count is None:
            raise ParseError("missing 'simplices' header")
        try:
            return cls(count, tuple(pairings), tuple(frees))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc


# ---------------------------------------------------------------------------
# orientations


@dataclass(frozen=True)
class OrientationAssignment:
    """A sign per simplex making every pairing orientation-reversing."""

    signs: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.signs[k]


@dataclass(frozen=True)
class NonOrientableWitness:
    """Pairings forming a closed walk that admits no consistent signs."""

    pairings: tuple[Pairing, ...]


def _perm_sign_between(dom: tuple[int, ...], images: list[int]) -> int:
    """Sign of the permutation taking ascending dom to ascending images."""
    cod = sorted(images)
    pos = [cod.index(x) for x in images]
    sign = 1
    for a in range(len(pos)):
        for b in range(a + 1, len(pos)):
            if pos[a] > pos[b]:
                sign = -sign
    return sign


def pairing_parity(p: Pairing) -> int:
    """Sign of the vertex map between ascending facet vertex lists."""
    dom = facet_vertices(p.side_a[1])
    return _perm_sign_between(dom, [p.fmap[v] for v in dom])


def pairing_sign(t: Triangulation, p: Pairing, o: OrientationAssignment) -> int:
    """Orientation sign of a pairing: -1 means orientation-reversing.

    The facet orientation induced on facet i of an oriented simplex carries
    the boundary coefficient (-1)^(i+1); the pairing is reversing when the
    vertex-map sign times both induced-orientation coefficients is -1.
    """
    (k, i), (l, j) = p.side_a, p.side_b
    return (
        pairing_parity(p)
        * o[k] * ((-1) ** (i + 1))
        * o[l] * ((-1) ** (j + 1))
    )


def orientability(t: Triangulation):
    """An OrientationAssignment, or a NonOrientableWitness if none exists.

    Signs propagate over the pairing graph: each pairing forces the product
    of its two simplex signs, and a self-pairing must be intrinsically
    reversing.  Free facets impose no constraint.
    """
    # forced[k][l] -> required o_k * o_l through a given pairing
    required: dict[tuple[int, int], list[tuple[int, Pairing]]] = {}
    for p in t.pairings:
        (k, i), (l, j) = p.side_a, p.side_b
        need = -pairing_parity(p) * ((-1) ** (i + j))
        if k == l:
            if need != 1:  # o_k^2 = 1 can never satisfy a -1 requirement
                return NonOrientableWitness((p,))
            continue
        required.setdefault((k, l), []).append((need, p))

    adj: dict[int, list[tuple[int, int, Pairing]]] = {k: [] for k in t.simplices}
    for (k, l), entries in required.items():
        for (need, p) in entries:
            adj[k].append((l, need, p))
            adj[l].append((k, need, p))

    signs = [0] * t.simplex_count
    via: dict[int, tuple[int, Pairing]] = {}
    for root in t.simplices:
        if signs[root]:
            continue
        signs[root] = 1
        queue = deque([root])
        while queue:
            k = queue.popleft()
            for (l, need, p) in adj[k]:
                want = need * signs[k]
                if signs[l] == 0:
                    signs[l] = want
                    via[l] = (k, p)
                    queue.append(l)
                elif signs[l] != want:
                    # walk both simplices back to their common ancestor
                    def path(x):
                        out = []
                        while x in via:
                            x2, px = via[x]
                            out.append(px)
                            x = x2
                        return out
                    cycle = path(k) + [p] + path(l)
                    return NonOrientableWitness(tuple(cycle))
    return OrientationAssignment(tuple(signs))


def is_orientable(t: Triangulation) -> bool:
    return isinstance(orientability(t), OrientationAssignment)


# ---------------------------------------------------------------------------
# automorphisms and isomorphisms


_S5 = tuple((0,) + p for p in iter_permutations(VERTICES))


@dataclass(frozen=True)
class TriAutomorphism:
    """A simplex bijection with one vertex bijection per simplex.

    ``simplex_map[k]`` is the image simplex; ``vertex_maps[k]`` is a 6-entry
    table (entry 0 unused) giving the vertex bijection on simplex k.
    """

    simplex_map: tuple[int, ...]
    vertex_maps: tuple[tuple[int, ...], ...]

    @property
    def is_identity(self) -> bool:
        ident = (0,) + VERTICES
        return all(self.simplex_map[k] == k for k in range(len(self.simplex_map))) and all(
            vm == ident for vm in self.vertex_maps
        )

    def compose(self, other: "TriAutomorphism") -> "TriAutomorphism":
        """self after other."""
        n = len(self.simplex_map)
        smap = tuple(self.simplex_map[other.simplex_map[k]] for k in range(n))
        vmaps = []
        for k in range(n):
            mid = other.simplex_map[k]
            vmaps.append(
                (0,) + tuple(self.vertex_maps[mid][other.vertex_maps[k][v]] for v in VERTICES)
            )
        return TriAutomorphism(smap, tuple(vmaps))

    def inverse(self) -> "TriAutomorphism":
        n = len(self.simplex_map)
        inv_s = [0] * n
        for k in range(n):
            inv_s[self.simplex_map[k]] = k
        vmaps: list[tuple[int, ...]] = [()] * n
        for k in range(n):
            img = self.simplex_map[k]
            table = [0] * 6
            for v in VERTICES:
                table[self.vertex_maps[k][v]] = v
            vmaps[img] = tuple(table)
        return TriAutomorphism(tuple(inv_s), tuple(vmaps))

    def flag_permutation(self) -> list[int]:
        """One-line image list on flags (simplex, vertex) numbered 5k+v-1."""
        n = len(self.simplex_map)
        out = [0] * (5 * n)
        for k in range(n):
            for v in VERTICES:
                out[5 * k + v - 1] = 5 * self.simplex_map[k] + self.vertex_maps[k][v] - 1
        return out


class TriAutGroup:
    """The full automorphism group of a triangulation, element-wise."""

    def __init__(self, elements):
        self.elements = tuple(elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def identity(self) -> TriAutomorphism:
        return next(e for e in self.elements if e.is_identity)

    def to_permutation_group(self) -> FiniteGroup:
        """The same group as an abstract group on flag permutations.

        The flag action is faithful, so the returned group is isomorphic to
        this automorphism group; an assertion checks the orders agree.
        """
        from .groups import group_from_permutations

        perms = [e.flag_permutation() for e in self.elements if not e.is_identity]
        if not perms:
            return FiniteGroup(((0,),), ())
        g = group_from_permutations(perms)
        if g.order != self.order:
            raise AssertionError("flag representation is not faithful")
        return g


def _tri_joint_refine(t1: Triangulation, t2: Triangulation):
    """Comparable colour refinement over both triangulations at once."""

    def initial(t):
        return {k: (t.self_pairing_count(k), t.free_count(k)) for k in t.simplices}

    def facet_tokens(t, colors, k):
        toks = []
        for i in VERTICES:
            pr = t.partner(k, i)
            if pr is None:
                toks.append(("free",))
            elif pr[0] == k:
                toks.append(("self",))
            else:
                toks.append(("ext", colors[pr[0]]))
        return tuple(sorted(toks))

    c1, c2 = initial(t1), initial(t2)
    palette = {s: i for i, s in enumerate(sorted(set(c1.values()) | set(c2.values())))}
    c1 = {k: palette[v] for k, v in c1.items()}
    c2 = {k: palette[v] for k, v in c2.items()}
    while True:
        s1 = {k: (c1[k], facet_tokens(t1, c1, k)) for k in t1.simplices}
        s2 = {k: (c2[k], facet_tokens(t2, c2, k)) for k in t2.simplices}
        palette = {s: i for i, s in enumerate(sorted(set(s1.values()) | set(s2.values())))}
        n1 = {k: palette[s1[k]] for k in t1.simplices}
        n2 = {k: palette[s2[k]] for k in t2.simplices}
        if n1 == c1 and n2 == c2:
            return c1, c2
        c1, c2 = n1, n2


def _propagate(t1, t2, c1, c2, k0, l0, sigma, used_inverse):
    """Extend the seed assignment over k0's component, or return None.

    ``used_inverse`` maps already-claimed t2 simplices to their sources in
    other components; the new component must stay disjoint from it.
    """
    mapped: dict[int, tuple[int, tuple[int, ...]]] = {k0: (l0, sigma)}
    inverse: dict[int, int] = {l0: k0}
    if l0 in used_inverse:
        return None
    queue = deque([k0])
    while queue:
        k = queue.popleft()
        lk, sk = mapped[k]
        for i in VERTICES:
            pr = t1.partner(k, i)
            image = t2.partner(lk, sk[i])
            if pr is None:
                if image is not None or not t2.is_free(lk, sk[i]):
                    return None
                if not t1.is_free(k, i):
                    return None
                continue
            if image is None:
                return None
            k2, j, fmap = pr
            l2, j2, fmap2 = image
            table = [0] * 6
            for v in facet_vertices(i):
                table[fmap[v]] = fmap2[sk[v]]
            table[j] = j2
            sigma2 = tuple(table)
            if k2 in mapped:
                if mapped[k2] != (l2, sigma2):
                    return None
            else:
                if c1[k2] != c2[l2]:
                    return None
                if l2 in inverse or l2 in used_inverse:
                    return None
                mapped[k2] = (l2, sigma2)
                inverse[l2] = k2
                queue.append(k2)
    return mapped


def isomorphisms_between(
    t1: Triangulation, t2: Triangulation, limit: int | None = None
) -> list[TriAutomorphism]:
    """All isomorphisms t1 -> t2 (as TriAutomorphism data on t1's ids).

    Components are matched independently: each source component is seeded at
    a simplex of locally rarest colour, and candidate images are filtered by
    the joint colour refinement before propagation along pairings.
    """
    if t1.simplex_count != t2.simplex_count or len(t1.pairings) != len(t2.pairings):
        return []
    if len(t1.free_facets) != len(t2.free_facets):
        return []
    c1, c2 = _tri_joint_refine(t1, t2)
    if sorted(c1.values()) != sorted(c2.values()):
        return []
    comps1 = sorted(t1.components(), key=lambda c: (len(c), c))
    comp_sizes2 = {}
    comp_of2 = {}
    for idx, comp in enumerate(t2.components()):
        comp_sizes2[idx] = len(comp)
        for k in comp:
            comp_of2[k] = idx

    color_count1: dict[int, int] = {}
    for k in t1.simplices:
        color_count1[c1[k]] = color_count1.get(c1[k], 0) + 1

    seeds = []
    for comp in comps1:
        seed = min(comp, key=lambda k: (color_count1[c1[k]], k))
        seeds.append((comp, seed))

    by_color2: dict[int, list[int]] = {}
    for l in t2.simplices:
        by_color2.setdefault(c2[l], []).append(l)

    results: list[TriAutomorphism] = []

    def assemble(parts):
        smap = [0] * t1.simplex_count
        vmaps: list[tuple[int, ...]] = [()] * t1.simplex_count
        for mapped in parts:
            for k, (l, sigma) in mapped.items():
                smap[k] = l
                vmaps[k] = sigma
        results.append(TriAutomorphism(tuple(smap), tuple(vmaps)))

    def solve(ci, used_inverse, used_comps2, parts) -> bool:
        if ci == len(seeds):
            assemble(parts)
            return limit is not None and len(results) >= limit
        comp, seed = seeds[ci]
        for l0 in by_color2[c1[seed]]:
            tc = comp_of2[l0]
            if tc in used_comps2 or comp_sizes2[tc] != len(comp):
                continue
            for sigma in _S5:
                mapped = _propagate(t1, t2, c1, c2, seed, l0, sigma, used_inverse)
                if mapped is None:
                    continue
                if len(mapped) != len(comp):
                    continue
                new_inverse = dict(used_inverse)
                for k, (l, _) in mapped.items():
                    new_inverse[l] = k
                if solve(ci + 1, new_inverse, used_comps2 | {tc}, parts + [mapped]):
                    return True
        return False

    solve(0, {}, set(), [])
    # full conjugation check: every pairing must map to a pairing
    verified = []
    for phi in results:
        ok = True
        for p in t1.pairings:
            (k, i), (l, j) = p.side_a, p.side_b
            sk = phi.vertex_maps[k]
            image = t2.partner(phi.simplex_map[k], sk[i])
            if image is None:
                ok = False
                break
            l2, j2, fmap2 = image
            if l2 != phi.simplex_map[l] or j2 != phi.vertex_maps[l][j]:
                ok = False
                break
            pd = p.as_dict()
            if any(fmap2[sk[v]] != phi.vertex_maps[l][pd[v]] for v in facet_vertices(i)):
                ok = False
                break
        if not ok:
            raise AssertionError("propagation produced a non-automorphism")
        verified.append(phi)
    return verified


def automorphism_group(t: Triangulation, cap: int = AUT_SIMPLEX_CAP) -> TriAutGroup:
    """The full automorphism group of t (simplex count capped)."""
    if t.simplex_count > cap:
        raise CapExceededError(
            f"{t.simplex_count} simplices exceeds automorphism cap {cap}"
        )
    return TriAutGroup(isomorphisms_between(t, t))


def are_isomorphic(t1: Triangulation, t2: Triangulation) -> bool:
    return bool(isomorphisms_between(t1, t2, limit=1))


def orientation_preserving_subgroup(
    t: Triangulation, o: OrientationAssignment, auts: TriAutGroup
) -> TriAutGroup:
    """Automorphisms whose sign character is trivial.

    An automorphism taking simplex k to phi(k) via sigma_k multiplies the
    orientation by sgn(sigma_k) * o(k) * o(phi(k)); this value is constant
    on connected components (asserted) and the element preserves orientation
    iff it is +1 everywhere.
    """
    if not isinstance(o, OrientationAssignment):
        raise ValueError("triangulation must be orientable")
    comps = t.components()
    kept = []
    for phi in auts:
        chars = []
        all_plus = True
        for comp in comps:
            vals = set()
            for k in comp:
                sgn = _perm_sign_between(
                    VERTICES, [phi.vertex_maps[k][v] for v in VERTICES]
                )
                vals.add(sgn * o[k] * o[phi.simplex_map[k]])
            if len(vals) != 1:
                raise AssertionError("orientation character not constant on a component")
            chars.append(vals.pop())
        all_plus = all(ch == 1 for ch in chars)
        if all_plus:
            kept.append(phi)
    return TriAutGroup(kept)


def action_is_free(t: Triangulation, auts: TriAutGroup) -> bool:
    """No non-identity element fixes a simplex or swaps a paired pair."""
    paired = set()
    for p in t.pairings:
        a, b = p.side_a[0], p.side_b[0]
        if a != b:
            paired.add((a, b))
            paired.add((b, a))
    for phi in auts:
        if phi.is_identity:
            continue
        for k in t.simplices:
            img = phi.simplex_map[k]
            if img == k:
                return False
            if phi.simplex_map[img] == k and (k, img) in paired:
                return False
    return True


# ---------------------------------------------------------------------------
# building blocks

# Internal self-pairing maps of the edge complex.  The first identifies
# facets 2 and 3; the second identifies facets 5 and 4 and is calibrated so
# that every internal pairing is orientation-reversing while the complex
# keeps a trivial automorphism group (see the construction notes in
# edge_complex).
_MAP_F2_F3 = {1: 4, 3: 2, 4: 5, 5: 1}
_MAP_F5_F4 = {1: 3, 2: 2, 3: 5, 4: 1}


def edge_complex() -> Triangulation:
    """The rigid two-simplex complex with two free facets.

    Simplex 0 carries two self-pairings (facets 2-3 and 5-4), simplex 1
    carries one (facets 2-3); facet 1 of each is glued to the other by the
    identity.  Facets 4 and 5 of simplex 1 stay free.  The complex is
    orientable, its automorphism group is trivial, and the two free facets
    are inequivalent, which is what makes it usable as a rigid connector.
    """
    pairings = (
        make_pairing((0, 2), (0, 3), dict(_MAP_F2_F3)),
        make_pairing((0, 5), (0, 4), dict(_MAP_F5_F4)),
        make_pairing((0, 1), (1, 1), {v: v for v in (2, 3, 4, 5)}),
        make_pairing((1, 2), (1, 3), dict(_MAP_F2_F3)),
    )
    return Triangulation(2, pairings, ((1, 4), (1, 5)))


_CHAIN_MAP_F4_F5 = {1: 1, 2: 2, 3: 3, 5: 4}


def edge_complex_chain(n: int) -> Triangulation:
    """n copies of the edge complex linked into a chain.

    The free facet 4 of copy k is glued to the free facet 5 of copy k+1 by
    the vertex map 1,2,3,5 -> 1,2,3,4.  The two chain ends (facet 5 of the
    first copy, facet 4 of the last) remain free.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    e = edge_complex()
    pairings: list[Pairing] = []
    for t in range(n):
        off = 2 * t
        for p in e.pairings:
            (k, i), (l, j) = p.side_a, p.side_b
            pairings.append(make_pairing((k + off, i), (l + off, j), p.as_dict()))
    for t in range(n - 1):
        b_here = 2 * t + 1
        b_next = 2 * t + 3
        pairings.append(
            make_pairing((b_here, 4), (b_next, 5), dict(_CHAIN_MAP_F4_F5))
        )
    free = ((1, 5), (2 * n - 1, 4))
    return Triangulation(2 * n, tuple(pairings), tuple(sorted(free)))


def vertex_subcomplex() -> Triangulation:
    """One simplex, facets 5 and 1 self-identified, three free facets."""
    pairing = make_pairing((0, 5), (0, 1), {1: 5, 2: 3, 3: 4, 4: 2})
    return Triangulation(1, (pairing,), ((0, 2), (0, 3), (0, 4)))


def double_of_simplex() -> Triangulation:
    """Two simplices glued along all five facets by identity maps."""
    pairings = tuple(
        make_pairing((0, i), (1, i), {v: v for v in facet_vertices(i)})
        for i in VERTICES
    )
    return Triangulation(2, pairings, ())


def one_cusped_triangulation() -> Triangulation:
    """The minimal closed example: two simplices, five pairings, one cusp.

    Facet f of simplex 0 is glued to facet f of simplex 1 for every f, by
    the five vertex maps below (read positionally on ascending facet
    vertices).  All twenty 2-faces lie on a single face cycle of length 20
    whose return map is the identity.
    """
    maps = {
        5: {1: 4, 2: 2, 3: 3, 4: 1},
        4: {1: 3, 2: 5, 3: 2, 5: 1},
        1: {2: 3, 3: 2, 4: 5, 5: 4},
        2: {1: 4, 3: 5, 4: 1, 5: 3},
        3: {1: 5, 2: 4, 4: 2, 5: 1},
    }
    pairings = tuple(
        make_pairing((0, f), (1, f), dict(maps[f])) for f in sorted(maps)
    )
    return Triangulation(2, pairings, ())


# ---------------------------------------------------------------------------
# glueing helpers


def _shift_pairings(t: Triangulation, off: int) -> list[Pairing]:
    out = []
    for p in t.pairings:
        (k, i), (l, j) = p.side_a, p.side_b
        out.append(make_pairing((k + off, i), (l + off, j), p.as_dict()))
    return out


_SWAP23 = {1: 1, 2: 3, 3: 2, 4: 4, 5: 5}


def _cross_pairing(side_plain, sign_plain, side_conn, sign_conn) -> Pairing:
    """Orientation-reversing gluing of a free facet pair.

    The vertex map sends the ascending vertices of the plain side to the
    ascending vertices of the connector side; when that map would preserve
    orientation, it is composed with the swap of vertices 2 and 3 on the
    connector facet (always a facet labelled 4 or 5, whose vertex set
    contains both).
    """
    (ks, fs), (kc, fc) = side_plain, side_conn
    dom = facet_vertices(fs)
    cod = facet_vertices(fc)
    vmap = dict(zip(dom, cod))
    sign = sign_plain * ((-1) ** (fs + 1)) * sign_conn * ((-1) ** (fc + 1))
    if sign != -1:
        vmap = {v: _SWAP23[w] for v, w in vmap.items()}
    return make_pairing((ks, fs), (kc, fc), vmap)


def _require_orientable(t: Triangulation) -> OrientationAssignment:
    o = orientability(t)
    if not isinstance(o, OrientationAssignment):
        raise AssertionError("construction lost orientability")
    return o


# ---------------------------------------------------------------------------
# graph complexes


def graph_complex(gp: LabeledDigraph) -> Triangulation:
    """The rigid complex modelled on a cubic-minus-one-edge graph.

    Every graph vertex becomes a vertex sub-complex, every graph edge an
    edge-complex copy; the copy for edge {u, v} (u < v) glues its facet 4
    into u's sub-complex and its facet 5 into v's, the receiving facet slots
    being assigned in order 2, 3, 4 by increasing edge index at each vertex.
    The two facet-4 slots at the valence-2 vertices stay free.  All glueing
    maps are orientation-reversing.
    """
    if not gp.undirected:
        raise ValueError("expected an undirected graph")
    if not gp.is_connected():
        raise ValueError("expected a connected graph")
    degs = sorted(gp.degree(v) // 2 for v in gp.vertices)
    n_two = sum(1 for d in degs if d == 2)
    if n_two != 2 or any(d not in (2, 3) for d in degs):
        raise ValueError("expected a cubic graph with one edge deleted")

    verts = sorted(gp.vertices)
    vidx = {v: i for i, v in enumerate(verts)}
    edges = sorted(gp.undirected_edges())
    nv, ne = len(verts), len(edges)

    vsub = vertex_subcomplex()
    ecx = edge_complex()
    o_e = _require_orientable(ecx)

    pairings: list[Pairing] = []
    for i in range(nv):
        pairings.extend(_shift_pairings(vsub, i))

    slot: dict[tuple[int, int], int] = {}
    used_slots: dict[int, int] = {i: 0 for i in range(nv)}
    for t_idx, (a, b, _) in enumerate(edges):
        for v in (a, b):
            i = vidx[v]
            slot[(i, t_idx)] = 2 + used_slots[i]
            used_slots[i] += 1

    for t_idx, (a, b, _) in enumerate(edges):
        off = nv + 2 * t_idx
        pairings.extend(_shift_pairings(ecx, off))
        b_id = off + 1
        pairings.append(
            _cross_pairing((vidx[a], slot[(vidx[a], t_idx)]), 1, (b_id, 4), o_e[1])
        )
        pairings.append(
            _cross_pairing((vidx[b], slot[(vidx[b], t_idx)]), 1, (b_id, 5), o_e[1])
        )

    free = tuple(
        sorted((i, 4) for i in range(nv) if used_slots[i] == 2)
    )
    out = Triangulation(nv + 2 * ne, tuple(pairings), free)
    _require_orientable(out)
    return out


# ---------------------------------------------------------------------------
# the group-realization builders


def _blown_up_graph(group: FiniteGroup) -> tuple[LabeledDigraph, dict, dict]:
    m = len(group.generators)
    if m == 0:
        raise ValueError("group needs at least one generator")
    gp = blow_up(cayley_graph(group), m)
    vindex = {v: i for i, v in enumerate(gp.vertices)}
    rank = {l: r for r, l in enumerate(gp.label_order)}
    # facet of S_v receiving label l: position of l among v's incident labels
    fpos: dict[tuple, dict] = {}
    for v in gp.vertices:
        incident = sorted(
            {l for (a, b, l) in gp.edges if v in (a, b)}, key=lambda l: rank[l]
        )
        if len(incident) != 5:
            raise AssertionError("blow-up vertex without 5 distinct incident labels")
        fpos[v] = {l: p + 1 for p, l in enumerate(incident)}
    return gp, vindex, fpos


def _edge_order(gp: LabeledDigraph, vindex: dict) -> list:
    rank = {l: r for r, l in enumerate(gp.label_order)}
    return sorted(gp.edges, key=lambda e: (rank[e[2]], vindex[e[0]], vindex[e[1]]))


def realize_group(group: FiniteGroup) -> Triangulation:
    """A closed orientable triangulation whose automorphism group is the
    given group.

    One simplex per vertex of the blown-up Cayley graph; every graph edge
    labelled l is realized by a fresh chain of edge complexes whose length
    is determined by l's rank, the chain's facet-4 end glued into the source
    simplex and its facet-5 end into the target simplex, at the facets named
    by l.  Distinct labels get distinct chain lengths, which makes every
    connector rigid and mutually non-isomorphic.
    """
    m = len(group.generators)
    gp, vindex, fpos = _blown_up_graph(group)

    def chain_len(label: str) -> int:
        idx = int(label[1:])
        if label[0] == "s":
            return idx
        if label[0] == "a":
            return m + idx
        return 3 * m + idx

    chain_cache: dict[int, tuple[Triangulation, OrientationAssignment]] = {}
    pairings: list[Pairing] = []
    count = len(gp.vertices)
    for (u, w, l) in _edge_order(gp, vindex):
        length = chain_len(l)
        if length not in chain_cache:
            ch = edge_complex_chain(length)
            chain_cache[length] = (ch, _require_orientable(ch))
        chain, o_c = chain_cache[length]
        off = count
        count += chain.simplex_count
        pairings.extend(_shift_pairings(chain, off))
        head = (off + 1, 5)  # free facet 5 of the first copy
        tail = (off + 2 * length - 1, 4)  # free facet 4 of the last copy
        pairings.append(
            _cross_pairing((vindex[u], fpos[u][l]), 1, tail, o_c[tail[0] - off])
        )
        pairings.append(
            _cross_pairing((vindex[w], fpos[w][l]), 1, head, o_c[head[0] - off])
        )
    out = Triangulation(count, tuple(pairings), ())
    _require_orientable(out)
    return out


def realize_group_census(group: FiniteGroup, graphs) -> Triangulation:
    """As realize_group, with graph complexes as the rigid connectors.

    ``graphs`` must be 5m pairwise non-isomorphic asymmetric connected cubic
    graphs on a common vertex count; the graph at position r models the
    connector for the label of rank r.  Different graph collections give
    non-isomorphic triangulations with the same automorphism group.
    """
    from .graphs import delete_edge, is_asymmetric

    m = len(group.generators)
    gp, vindex, fpos = _blown_up_graph(group)
    if len(graphs) != 5 * m:
        raise ValueError(f"need exactly {5 * m} graphs, got {len(graphs)}")
    sizes = {len(g.vertices) for g in graphs}
    if len(sizes) != 1:
        raise ValueError("graphs must share one vertex count")
    for idx, g in enumerate(graphs):
        if not is_asymmetric(g):
            raise ValueError(f"graph {idx} has a nontrivial automorphism")
    for a in range(len(graphs)):
        for b in range(a + 1, len(graphs)):
            if graph_isomorphisms(
                strip_labels(graphs[a]), strip_labels(graphs[b]), limit=1
            ):
                raise ValueError(f"graphs {a} and {b} are isomorphic")

    templates = []
    for g in graphs:
        c = graph_complex(delete_edge(g))
        templates.append((c, _require_orientable(c)))

    rank = {l: r for r, l in enumerate(gp.label_order)}
    pairings: list[Pairing] = []
    count = len(gp.vertices)
    for (u, w, l) in _edge_order(gp, vindex):
        conn, o_c = templates[rank[l]]
        off = count
        count += conn.simplex_count
        pairings.extend(_shift_pairings(conn, off))
        (k_tail, f_tail), (k_head, f_head) = conn.free_facets
        tail = (off + k_tail, f_tail)
        head = (off + k_head, f_head)
        pairings.append(
            _cross_pairing((vindex[u], fpos[u][l]), 1, tail, o_c[k_tail])
        )
        pairings.append(
            _cross_pairing((vindex[w], fpos[w][l]), 1, head, o_c[k_head])
        )
    out = Triangulation(count, tuple(pairings), ())
    _require_orientable(out)
    return out
