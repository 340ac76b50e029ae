"""Labelled directed multigraphs and the graph constructions used by the builders.

Graphs here are finite directed multigraphs whose edges carry labels from a
totally ordered label set.  Undirected graphs are stored as symmetric pairs of
directed edges and flagged as such.  The module provides:

* an exact automorphism/isomorphism search in two modes (labels fixed, or
  labels permuted by a bijection),
* the complete-graph glueing family: the properly 5-edge-coloured K6, the
  octahedral graph obtained by dropping one colour, and the triangular-prism
  graph obtained by dropping one more,
* the doubled-vertex blow-up of a Cayley graph whose label-preserving
  automorphism group realizes the original group,
* enumeration of connected cubic graphs up to isomorphism (4..14 vertices)
  together with asymmetry testing and non-bridge edge deletion.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import CapExceededError, ParseError

VERTEX_CAP = 4096

MODE_PRESERVE = "preserve"
MODE_PERMUTE = "permute"


class GraphTooLargeError(CapExceededError):
    pass


# ---------------------------------------------------------------------------
# core graph type


@dataclass(frozen=True)
class LabeledDigraph:
    """A finite directed multigraph with totally ordered edge labels.

    ``edges`` is a tuple of ``(src, dst, label)`` triples; parallel edges are
    allowed, self-loops are not.  ``label_order`` fixes the total order on
    labels.  When ``undirected`` is set, every edge must occur together with
    its reverse (the pair represents one undirected edge).
    """

    vertices: tuple[Hashable, ...]
    edges: tuple[tuple[Hashable, Hashable, Hashable], ...]
    label_order: tuple[Hashable, ...]
    undirected: bool = False

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertices")
        if len(self.vertices) > VERTEX_CAP:
            raise GraphTooLargeError(
                f"{len(self.vertices)} vertices exceeds cap {VERTEX_CAP}"
            )
        lset = set(self.label_order)
        if len(lset) != len(self.label_order):
            raise ValueError("duplicate labels in label_order")
        for (u, v, l) in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge endpoint not a vertex: {(u, v, l)!r}")
            if l not in lset:
                raise ValueError(f"edge label {l!r} not in label_order")
        if self.undirected:
            fwd = Counter((u, v, l) for (u, v, l) in self.edges)
            rev = Counter((v, u, l) for (u, v, l) in self.edges)
            if fwd != rev:
                raise ValueError("undirected graph must store symmetric edge pairs")

    # -- basic queries ------------------------------------------------------

    def out_edges(self, v) -> list[tuple[Hashable, Hashable, Hashable]]:
        return [e for e in self.edges if e[0] == v]

    def in_edges(self, v) -> list[tuple[Hashable, Hashable, Hashable]]:
        return [e for e in self.edges if e[1] == v]

    def degree(self, v) -> int:
        """Total degree: out-degree plus in-degree."""
        return sum(1 for e in self.edges if v in (e[0], e[1]))

    def undirected_edges(self) -> list[tuple[Hashable, Hashable, Hashable]]:
        """Canonical (min, max, label) triples; each undirected edge once."""
        if not self.undirected:
            raise ValueError("not an undirected graph")
        seen: Counter = Counter()
        for (u, v, l) in self.edges:
            key = (min(u, v), max(u, v), l)
            seen[key] += 1
        out = []
        for key, cnt in sorted(seen.items()):
            if cnt % 2 != 0:
                raise ValueError("unmatched directed edge in undirected graph")
            out.extend([key] * (cnt // 2))
        return out

    def neighbors(self, v) -> set:
        return {w for (u, w, _) in self.edges if u == v} | {
            u for (u, w, _) in self.edges if w == v
        }

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.vertices)

    # -- serialization ------------------------------------------------------

    def to_exchange_text(self) -> str:
        """Whitespace-separated edge-list format with a label-order header.

        Vertex and label names are written through :func:`_fs`, which replaces
        whitespace; round-tripping therefore yields string names.
        """
        lines = [
            "labels " + " ".join(_fs(l) for l in self.label_order),
            "undirected " + ("1" if self.undirected else "0"),
            "vertices " + " ".join(_fs(v) for v in self.vertices),
        ]
        for (u, v, l) in self.edges:
            lines.append(f"{_fs(u)} {_fs(v)} {_fs(l)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_exchange_text(cls, text: str) -> "LabeledDigraph":
        labels: tuple[str, ...] | None = None
        vertices: tuple[str, ...] | None = None
        undirected = False
        edges = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "labels":
                labels = tuple(parts[1:])
            elif parts[0] == "undirected":
                if len(parts) != 2 or parts[1] not in ("0", "1"):
                    raise ParseError("undirected header wants 0 or 1", lineno)
                undirected = parts[1] == "1"
            elif parts[0] == "vertices":
                vertices = tuple(parts[1:])
            else:
                if len(parts) != 3:
                    raise ParseError(f"expected 'src dst label', got {line!r}", lineno)
                edges.append((parts[0], parts[1], parts[2]))
        if labels is None:
            raise ParseError("missing 'labels' header")
        if vertices is None:
            vertices = tuple(sorted({u for (u, _, _) in edges} | {v for (_, v, _) in edges}))
        try:
            return cls(vertices, tuple(edges), labels, undirected)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    def to_dot(self, name: str = "g") -> str:
        """Graphviz source; undirected graphs emit each edge once."""
        if self.undirected:
            lines = [f"graph {name} {{"]
            for (u, v, l) in self.undirected_edges():
                lines.append(f'  "{_fs(u)}" -- "{_fs(v)}" [label="{_fs(l)}"];')
        else:
            lines = [f"digraph {name} {{"]
            for (u, v, l) in self.edges:
                lines.append(f'  "{_fs(u)}" -> "{_fs(v)}" [label="{_fs(l)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _fs(x) -> str:
    """File-safe token for a vertex or label name."""
    return "".join(ch if not ch.isspace() else "_" for ch in str(x))


def make_undirected(
    vertices: Sequence[Hashable],
    und_edges: Iterable[tuple[Hashable, Hashable, Hashable]],
    label_order: Sequence[Hashable],
) -> LabeledDigraph:
    """Build an undirected graph from one triple per undirected edge."""
    directed = []
    for (u, v, l) in und_edges:
        directed.append((u, v, l))
        directed.append((v, u, l))
    return LabeledDigraph(tuple(vertices), tuple(directed), tuple(label_order), True)


def strip_labels(g: LabeledDigraph) -> LabeledDigraph:
    """Forget labels: every edge gets the single label ``"e"``."""
    return LabeledDigraph(
        g.vertices,
        tuple((u, v, "e") for (u, v, _) in g.edges),
        ("e",),
        g.undirected,
    )


# ---------------------------------------------------------------------------
# automorphisms and isomorphisms


@dataclass(frozen=True)
class GraphAutomorphism:
    """A vertex bijection together with the label bijection it induces."""

    vertex_map: tuple[tuple[Hashable, Hashable], ...]
    label_map: tuple[tuple[Hashable, Hashable], ...]

    @property
    def vdict(self) -> dict:
        return dict(self.vertex_map)

    @property
    def ldict(self) -> dict:
        return dict(self.label_map)

    @property
    def is_identity(self) -> bool:
        return all(a == b for a, b in self.vertex_map) and all(
            a == b for a, b in self.label_map
        )

    def compose(self, other: "GraphAutomorphism") -> "GraphAutomorphism":
        """Return self-after-other (apply ``other`` first)."""
        ov, sv = other.vdict, self.vdict
        ol, sl = other.ldict, self.ldict
        return GraphAutomorphism(
            tuple(sorted((x, sv[y]) for x, y in ov.items())),
            tuple(sorted((x, sl[y]) for x, y in ol.items())),
        )

    def inverse(self) -> "GraphAutomorphism":
        return GraphAutomorphism(
            tuple(sorted((y, x) for x, y in self.vertex_map)),
            tuple(sorted((y, x) for x, y in self.label_map)),
        )


class AutomorphismGroup:
    """The full automorphism group of a graph, stored element-wise."""

    def __init__(self, elements: Sequence[GraphAutomorphism]):
        self.elements = tuple(elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[GraphAutomorphism]:
        return iter(self.elements)

    def generators(self) -> tuple[GraphAutomorphism, ...]:
        """A (non-minimal but small) generating subset found greedily."""
        if not self.elements:
            return ()
        idelem = next(e for e in self.elements if e.is_identity)
        gens: list[GraphAutomorphism] = []
        closure = {idelem}
        for e in self.elements:
            if e in closure:
                continue
            gens.append(e)
            frontier = list(closure)
            closure.add(e)
            queue = deque([e])
            while queue:
                x = queue.popleft()
                for y in list(closure):
                    for z in (x.compose(y), y.compose(x)):
                        if z not in closure:
                            closure.add(z)
                            queue.append(z)
            if len(closure) == len(self.elements):
                break
        return tuple(gens)


def _pair_labels(g: LabeledDigraph) -> dict:
    table: dict = {}
    for (u, v, l) in g.edges:
        table.setdefault((u, v), []).append(l)
    return {k: tuple(sorted(map(_key, v))) for k, v in table.items()}


def _key(x):
    """Sort key usable across mixed label/vertex types."""
    return (type(x).__name__, repr(x))


def _joint_refine(g1: LabeledDigraph, g2: LabeledDigraph, mode: str):
    """Colour refinement run jointly so colours are comparable across graphs."""

    def initial(g):
        sig = {}
        for v in g.vertices:
            outs = [(l,) for (_, _, l) in g.out_edges(v)]
            ins = [(l,) for (_, _, l) in g.in_edges(v)]
            if mode == MODE_PRESERVE:
                sig[v] = (
                    len(outs),
                    len(ins),
                    tuple(sorted(Counter(map(_key, (l for (_, _, l) in g.out_edges(v)))).items())),
                    tuple(sorted(Counter(map(_key, (l for (_, _, l) in g.in_edges(v)))).items())),
                )
            else:
                sig[v] = (len(outs), len(ins))
        return sig

    def neighbor_sig(g, colors, plabels, v):
        toks = []
        for w in g.neighbors(v):
            fwd = plabels.get((v, w), ())
            bwd = plabels.get((w, v), ())
            if mode == MODE_PRESERVE:
                toks.append((colors[w], fwd, bwd))
            else:
                toks.append((colors[w], len(fwd), len(bwd)))
        return tuple(sorted(toks))

    p1, p2 = _pair_labels(g1), _pair_labels(g2)
    sig1, sig2 = initial(g1), initial(g2)
    palette = {s: i for i, s in enumerate(sorted(set(sig1.values()) | set(sig2.values())))}
    c1 = {v: palette[sig1[v]] for v in g1.vertices}
    c2 = {v: palette[sig2[v]] for v in g2.vertices}
    while True:
        s1 = {v: (c1[v], neighbor_sig(g1, c1, p1, v)) for v in g1.vertices}
        s2 = {v: (c2[v], neighbor_sig(g2, c2, p2, v)) for v in g2.vertices}
        palette = {s: i for i, s in enumerate(sorted(set(s1.values()) | set(s2.values())))}
        n1 = {v: palette[s1[v]] for v in g1.vertices}
        n2 = {v: palette[s2[v]] for v in g2.vertices}
        if n1 == c1 and n2 == c2:
            return c1, c2
        c1, c2 = n1, n2


def _match_multisets(
    ls1: tuple, ls2: tuple, lmap: dict, linv: dict
) -> Iterator[None]:
    """Yield once per extension of the partial label bijection ls1 -> ls2.

    ``ls1``/``ls2`` are equal-length tuples of label sort-keys.  The
    extension is installed in ``lmap``/``linv`` while the generator is
    suspended at the yield and removed again on resumption; the generator is
    the only code that mutates the two dicts.
    """
    if len(ls1) != len(ls2):
        return
    if not ls1:
        yield None
        return
    a = ls1[0]
    rest1 = ls1[1:]
    if a in lmap:
        target = lmap[a]
        if target not in ls2:
            return
        idx = ls2.index(target)
        rest2 = ls2[:idx] + ls2[idx + 1 :]
        yield from _match_multisets(rest1, rest2, lmap, linv)
        return
    tried = set()
    for i, b in enumerate(ls2):
        if b in tried or b in linv:
            continue
        tried.add(b)
        rest2 = ls2[:i] + ls2[i + 1 :]
        lmap[a] = b
        linv[b] = a
        yield from _match_multisets(rest1, rest2, lmap, linv)
        del lmap[a]
        del linv[b]


def isomorphisms(
    g1: LabeledDigraph,
    g2: LabeledDigraph,
    mode: str = MODE_PRESERVE,
    limit: int | None = None,
) -> list[GraphAutomorphism]:
    """All structure-preserving vertex bijections from g1 onto g2.

    ``mode`` is ``"preserve"`` (labels fixed pointwise) or ``"permute"``
    (a label bijection may be applied).  ``limit`` stops the search after
    that many maps have been found.
    """
    if mode not in (MODE_PRESERVE, MODE_PERMUTE):
        raise ValueError(f"unknown mode {mode!r}")
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return []
    if len(g1.label_order) != len(g2.label_order):
        return []
    if mode == MODE_PRESERVE and set(map(_key, g1.label_order)) != set(
        map(_key, g2.label_order)
    ):
        return []
    c1, c2 = _joint_refine(g1, g2, mode)
    if sorted(c1.values()) != sorted(c2.values()):
        return []
    by_color: dict[int, list] = {}
    for w in g2.vertices:
        by_color.setdefault(c2[w], []).append(w)

    p1, p2 = _pair_labels(g1), _pair_labels(g2)
    nbrs1 = {v: sorted(g1.neighbors(v), key=_key) for v in g1.vertices}

    # static processing order: grow connectivity, prefer rare colours
    color_count = Counter(c1.values())
    order: list = []
    placed_set: set = set()
    remaining = set(g1.vertices)
    while remaining:
        best = None
        for v in remaining:
            anchored = sum(1 for w in nbrs1[v] if w in placed_set)
            score = (-anchored, color_count[c1[v]], _key(v))
            if best is None or score < best[0]:
                best = (score, v)
        order.append(best[1])
        placed_set.add(best[1])
        remaining.discard(best[1])

    results: list[GraphAutomorphism] = []
    vmap: dict = {}
    used: set = set()
    lmap: dict = {}
    linv: dict = {}
    label_actual1 = {_key(l): l for l in g1.label_order}
    label_actual2 = {_key(l): l for l in g2.label_order}

    def finish() -> GraphAutomorphism:
        if mode == MODE_PRESERVE:
            lpairs = tuple(sorted((l, l) for l in map(_key, g1.label_order)))
        else:
            free1 = sorted(k for k in map(_key, g1.label_order) if k not in lmap)
            free2 = sorted(k for k in map(_key, g2.label_order) if k not in linv)
            lpairs = tuple(sorted(list(lmap.items()) + list(zip(free1, free2))))
        return GraphAutomorphism(
            tuple(sorted((v, vmap[v]) for v in g1.vertices)),
            tuple(
                (label_actual1[a], label_actual2[b]) for a, b in lpairs
            ),
        )

    def place(idx: int) -> bool:
        if idx == len(order):
            results.append(finish())
            return limit is not None and len(results) >= limit
        v = order[idx]
        for w in by_color[c1[v]]:
            if w in used:
                continue
            pairs_to_match: list[tuple[tuple, tuple]] = []
            ok = True
            for u in order[:idx]:
                f1 = p1.get((v, u), ())
                b1 = p1.get((u, v), ())
                f2 = p2.get((w, vmap[u]), ())
                b2 = p2.get((vmap[u], w), ())
                if len(f1) != len(f2) or len(b1) != len(b2):
                    ok = False
                    break
                if mode == MODE_PRESERVE:
                    if f1 != f2 or b1 != b2:
                        ok = False
                        break
                else:
                    if f1:
                        pairs_to_match.append((f1, f2))
                    if b1:
                        pairs_to_match.append((b1, b2))
            if not ok:
                continue
            vmap[v] = w
            used.add(w)
            if mode == MODE_PRESERVE:
                if place(idx + 1):
                    return True
            else:
                if _place_labels(pairs_to_match, 0, idx):
                    return True
            del vmap[v]
            used.discard(w)
        return False

    def _place_labels(pairs, k, idx) -> bool:
        if k == len(pairs):
            return place(idx + 1)
        ls1, ls2 = pairs[k]
        for _ in _match_multisets(ls1, ls2, lmap, linv):
            # the matcher holds its extension in lmap/linv while suspended
            if _place_labels(pairs, k + 1, idx):
                return True
        return False

    place(0)
    return results


def automorphisms(g: LabeledDigraph, mode: str = MODE_PRESERVE) -> AutomorphismGroup:
    """The automorphism group of ``g`` in the requested mode."""
    return AutomorphismGroup(isomorphisms(g, g, mode))


def are_isomorphic(g1: LabeledDigraph, g2: LabeledDigraph, mode: str = MODE_PRESERVE) -> bool:
    return bool(isomorphisms(g1, g2, mode, limit=1))


# ---------------------------------------------------------------------------
# the glueing-graph family


def k6_glueing_graph() -> LabeledDigraph:
    """K6 with a proper 1-factorization: 15 edges in 5 perfect matchings.

    Vertices are "A".."F"; labels are 1..5, one per matching.  Built by the
    round-robin construction on five points plus a hub.
    """
    names = "ABCDEF"
    edges = []
    for i in range(5):
        label = i + 1
        edges.append((names[5], names[i], label))
        for j in (1, 2):
            a, b = (i + j) % 5, (i - j) % 5
            edges.append((names[a], names[b], label))
    return make_undirected(tuple(names), edges, (1, 2, 3, 4, 5))


def _matching_classes(g: LabeledDigraph) -> dict:
    classes: dict = {}
    for (u, v, l) in g.undirected_edges():
        classes.setdefault(l, []).append((u, v))
    return classes


def _check_proper_edge_colouring(g: LabeledDigraph) -> None:
    for l, pairs in _matching_classes(g).items():
        touched: set = set()
        for (u, v) in pairs:
            if u in touched or v in touched:
                raise ValueError(f"label {l!r} is not a matching")
            touched.update((u, v))


def boundary_graph(gamma: LabeledDigraph, i: Hashable) -> LabeledDigraph:
    """Drop every edge with label ``i`` from the coloured K6.

    The result is the octahedral graph (4-regular on 6 vertices, 12 edges)
    with the remaining 4 matching labels.
    """
    if i not in gamma.label_order:
        raise ValueError(f"label {i!r} not present")
    _check_proper_edge_colouring(gamma)
    kept = [(u, v, l) for (u, v, l) in gamma.undirected_edges() if l != i]
    labels = tuple(l for l in gamma.label_order if l != i)
    out = make_undirected(gamma.vertices, kept, labels)
    if any(out.degree(v) != 8 for v in out.vertices):  # degree() counts both directions
        raise ValueError("input was not a properly 5-coloured K6")
    return out


def klein_graph(gamma_hat: LabeledDigraph, j: Hashable) -> LabeledDigraph:
    """Drop a second matching: the triangular-prism graph with 3 labels."""
    if j not in gamma_hat.label_order:
        raise ValueError(f"label {j!r} not present")
    _check_proper_edge_colouring(gamma_hat)
    kept = [(u, v, l) for (u, v, l) in gamma_hat.undirected_edges() if l != j]
    labels = tuple(l for l in gamma_hat.label_order if l != j)
    out = make_undirected(gamma_hat.vertices, kept, labels)
    if len(out.undirected_edges()) != 9:
        raise ValueError("input was not the 4-coloured octahedral graph")
    return out


# ---------------------------------------------------------------------------
# Cayley-graph blow-up


def _gadget_rank(i: int, sign: str) -> int:
    """Position of the local vertex (s_i, sign) in the fixed listing order."""
    return 2 * (i - 1) + (0 if sign == "-" else 1)


def blow_up(cayley: LabeledDigraph, m: int) -> LabeledDigraph:
    """Replace each Cayley-graph vertex by a rigid 2m-vertex gadget.

    Input: the Cayley graph of a group with m generators (labels
    ``s1..sm``).  Each group element g becomes the 2m vertices
    ``(g, i, "-")`` and ``(g, i, "+")``, i = 1..m.  Every original edge
    g -> g*s_i becomes an edge (g, i, "-") -> (g*s_i, i, "+") with the same
    label, and each gadget is wired into a doubled cycle through fresh labels
    ``a1..a{2m}`` and ``b1..b{2m}``.  Internal edges run from the
    lower-ranked endpoint to the higher-ranked one in the listing order
    above.  The result is uniformly 5-valent and its label-preserving
    automorphism group is the original group acting by left translation.
    """
    expected = tuple(f"s{i}" for i in range(1, m + 1))
    if tuple(cayley.label_order) != expected:
        raise ValueError(f"expected generator labels {expected}, got {cayley.label_order}")
    labels = (
        list(expected)
        + [f"a{i}" for i in range(1, 2 * m + 1)]
        + [f"b{i}" for i in range(1, 2 * m + 1)]
    )
    verts = []
    for g in cayley.vertices:
        for i in range(1, m + 1):
            verts.append((g, i, "-"))
            verts.append((g, i, "+"))
    edges = []
    for (g, h, l) in cayley.edges:
        i = int(str(l)[1:])
        edges.append(((g, i, "-"), (h, i, "+"), l))

    # doubled internal cycle: (1,-) .. (m,-) (1,+) .. (m,+) back to (1,-)
    hops = []
    for i in range(1, m):
        hops.append(((i, "-"), (i + 1, "-"), i))  # labels a_i, b_i
    hops.append(((m, "-"), (1, "+"), m))
    for i in range(1, m):
        hops.append(((i, "+"), (i + 1, "+"), m + i))
    hops.append(((m, "+"), (1, "-"), 2 * m))
    for g in cayley.vertices:
        for (p, q, idx) in hops:
            a, b = (g, p[0], p[1]), (g, q[0], q[1])
            if _gadget_rank(*p) > _gadget_rank(*q):
                a, b = b, a
            edges.append((a, b, f"a{idx}"))
            edges.append((a, b, f"b{idx}"))
    return LabeledDigraph(tuple(verts), tuple(edges), tuple(labels), False)


def related_classes(blown: LabeledDigraph) -> list[frozenset]:
    """Transitive closure of "joined by at least two parallel edges"."""
    pair_count: Counter = Counter()
    for (u, v, _) in blown.edges:
        pair_count[frozenset((u, v))] += 1
    parent = {v: v for v in blown.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for pair, cnt in pair_count.items():
        if cnt >= 2:
            a, b = tuple(pair)
            parent[find(a)] = find(b)
    groups: dict = {}
    for v in blown.vertices:
        groups.setdefault(find(v), []).append(v)
    return [frozenset(vs) for vs in groups.values()]


# ---------------------------------------------------------------------------
# connected cubic graphs up to isomorphism


_CUBIC_SIZES = (4, 6, 8, 10, 12, 14)
_cubic_cache: dict[int, tuple[LabeledDigraph, ...]] = {}
_cert_memo: dict[tuple, tuple] = {}


def _refine_colors(n: int, adj: list[int], colors: list[int]) -> list[int]:
    while True:
        sig = []
        for v in range(n):
            mask = adj[v]
            nb = []
            w = 0
            mm = mask
            while mm:
                low = mm & -mm
                nb.append(colors[low.bit_length() - 1])
                mm ^= low
            nb.sort()
            sig.append((colors[v], tuple(nb)))
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def _distance_profiles(n: int, adj: list[int]) -> list[int]:
    """Initial colours from each vertex's sorted distance multiset.

    Isomorphism-invariant, so seeding the refinement with it cannot change
    which graphs share a certificate, but it splits regular graphs before
    any individualization happens.
    """
    profiles = []
    for v in range(n):
        dist = [n] * n  # n = unreachable sentinel
        dist[v] = 0
        frontier = [v]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for x in frontier:
                mm = adj[x]
                while mm:
                    low = mm & -mm
                    w = low.bit_length() - 1
                    mm ^= low
                    if dist[w] == n:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        profiles.append(tuple(sorted(dist)))
    palette = {p: i for i, p in enumerate(sorted(set(profiles)))}
    return [palette[p] for p in profiles]


def _canon_cert(n: int, edges: Iterable[tuple[int, int]]) -> tuple:
    """Canonical edge tuple of an unlabelled simple graph on n vertices.

    Individualization-refinement seeded with distance-profile colours; the
    certificate is the lexicographic minimum, over the leaves of the
    invariant search tree, of the sorted edge list rewritten in the leaf
    ordering.  Equal certificates hold exactly for isomorphic graphs.
    """
    edge_key = tuple(sorted(tuple(sorted(e)) for e in edges))
    memo_key = (n, edge_key)
    if memo_key in _cert_memo:
        return _cert_memo[memo_key]
    adj = [0] * n
    for (u, v) in edge_key:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best: list[tuple | None] = [None]

    def leaf(colors: list[int]) -> None:
        pos = [0] * n
        for v, c in enumerate(colors):
            pos[v] = c
        cert = tuple(
            sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for (u, v) in edge_key)
        )
        if best[0] is None or cert < best[0]:
            best[0] = cert

    def descend(colors: list[int]) -> None:
        colors = _refine_colors(n, adj, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = c
                break
        if target is None:
            leaf(colors)
            return
        for v in cells[target]:
            branched = [(c, 1) if w != v else (c, 0) for w, c in enumerate(colors)]
            palette = {s: i for i, s in enumerate(sorted(set(branched)))}
            descend([palette[s] for s in branched])

    descend(_distance_profiles(n, adj))
    cert = best[0]
    assert cert is not None
    _cert_memo[memo_key] = cert
    return cert


def _edges_connected(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    if n == 0:
        return True
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for (u, v) in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


def _moebius_ladder(n: int) -> tuple[tuple[int, int], ...]:
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, i + n // 2) for i in range(n // 2)]
    return tuple(tuple(sorted(e)) for e in edges)


def _all_cubic_certs(n: int) -> set[tuple]:
    """Certificates of all cubic graphs on n labelled vertices, up to iso.

    Exhausts the class by closing the seed under 2-switches: replacing edges
    {a,b},{c,d} on four distinct vertices by {a,c},{b,d} or {a,d},{b,c} when
    that keeps the graph simple.  Any two graphs with equal degree sequences
    are connected by such switches, so the closure starting from one cubic
    graph reaches every cubic graph on n vertices, including disconnected
    ones.
    """
    seed = _canon_cert(n, _moebius_ladder(n))
    seen = {seed}
    queue = deque([seed])
    while queue:
        edges = queue.popleft()
        eset = set(edges)
        elist = list(edges)
        for (e1, e2) in combinations(elist, 2):
            a, b = e1
            c, d = e2
            if len({a, b, c, d}) != 4:
                continue
            for (x1, x2) in (((a, c), (b, d)), ((a, d), (b, c))):
                n1 = tuple(sorted(x1))
                n2 = tuple(sorted(x2))
                if n1 in eset or n2 in eset:
                    continue
                newe = [e for e in elist if e not in (e1, e2)] + [n1, n2]
                cert = _canon_cert(n, newe)
                if cert not in seen:
                    seen.add(cert)
                    queue.append(cert)
    return seen


def cubic_graphs(two_k: int) -> tuple[LabeledDigraph, ...]:
    """All connected 3-regular simple graphs on ``two_k`` vertices, up to iso.

    Supported sizes are 4..14 (even).  Results are cached per size and
    returned in a deterministic order.
    """
    if two_k not in _CUBIC_SIZES:
        raise ValueError(f"two_k must be one of {_CUBIC_SIZES}")
    if two_k not in _cubic_cache:
        certs = sorted(
            c for c in _all_cubic_certs(two_k) if _edges_connected(two_k, c)
        )
        graphs = tuple(
            make_undirected(tuple(range(two_k)), [(u, v, "e") for (u, v) in c], ("e",))
            for c in certs
        )
        _cubic_cache[two_k] = graphs
    return _cubic_cache[two_k]


def is_asymmetric(g: LabeledDigraph) -> bool:
    """True when the only automorphism (labels ignored) is the identity."""
    return len(isomorphisms(strip_labels(g), strip_labels(g), MODE_PRESERVE, limit=2)) == 1


def delete_edge(g: LabeledDigraph) -> LabeledDigraph:
    """Remove the lexicographically first non-bridge edge of a cubic graph.

    The result keeps all vertices: two of them have valence 2, the rest
    valence 3.
    """
    if not g.undirected:
        raise ValueError("expected an undirected graph")
    if any(g.degree(v) != 6 for v in g.vertices):
        raise ValueError("expected a cubic graph")
    if not g.is_connected():
        raise ValueError("expected a connected graph")
    for (u, v, l) in sorted(g.undirected_edges(), key=lambda e: (_key(e[0]), _key(e[1]))):
        remaining = [e for e in g.undirected_edges() if e != (u, v, l)]
        trial = make_undirected(g.vertices, remaining, g.label_order)
        if trial.is_connected():
            return trial
    raise ValueError("graph has no non-bridge edge")
