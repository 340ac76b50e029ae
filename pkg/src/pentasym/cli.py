"""Command-line front door: build, analyze, and certify triangulations.

Subcommands:

* ``group``    — inspect a finite group file (order, generators, bounds),
* ``build``    — realize a group as the automorphism group of a closed
  orientable triangulation (``--mode edge`` for the chained-edge-complex
  construction, ``--mode graph`` for the graph-complex census variant),
* ``analyze``  — full invariant report of a triangulation file,
* ``latcheck`` — exact short-vector certificates for the cusp-rigidity
  lattices,
* ``census``   — enumerate cubic/asymmetric graph counts and build pairwise
  non-isomorphic triangulations sharing one automorphism group,
* ``examples`` — write the fixed example objects to files.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice
from pathlib import Path

from .errors import CapExceededError, ParseError, PentasymError
from .graphs import (
    boundary_graph,
    cubic_graphs,
    is_asymmetric,
    k6_glueing_graph,
    klein_graph,
)
from .groups import FiniteGroup, cyclic_group, generator_count_bound, load_group_json
from .cusps import cusp_descriptors
from .lattice import q_matrix, rigidity_case, search_radius, short_vectors, condition_filter
from .triangulation import (
    OrientationAssignment,
    Triangulation,
    action_is_free,
    automorphism_group,
    double_of_simplex,
    edge_complex,
    edge_complex_chain,
    one_cusped_triangulation,
    orientability,
    orientation_preserving_subgroup,
    realize_group,
    realize_group_census,
)
from .volumes import ExactVolume, manifold_volume


# ---------------------------------------------------------------------------
# report plumbing


def _volume_json(v: ExactVolume) -> dict:
    return {
        "coefficient": [v.coefficient.numerator, v.coefficient.denominator],
        "unit": v.unit,
        "value": v.value,
        "text": str(v),
    }


def _emit(args, lines: list[str], payload: dict) -> int:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)
    return 0


def _load_group(path: str) -> FiniteGroup:
    text = Path(path).read_text()
    return load_group_json(text)


# ---------------------------------------------------------------------------
# group


def cmd_group(args) -> int:
    g = _load_group(args.group_file)
    orders = sorted(g.element_order(x) for x in range(g.order))
    profile: dict[int, int] = {}
    for o in orders:
        profile[o] = profile.get(o, 0) + 1
    lines = [
        f"order {g.order}",
        f"generators {len(g.generators)}",
        f"generator orders {[g.element_order(s) for s in g.generators]}",
        f"element order profile {profile}",
        f"generator count upper bound {generator_count_bound(g.order)}",
    ]
    payload = {
        "order": g.order,
        "generators": len(g.generators),
        "generator_orders": [g.element_order(s) for s in g.generators],
        "element_order_profile": {str(k): v for k, v in profile.items()},
        "generator_count_bound": generator_count_bound(g.order),
    }
    if g.order <= 64:
        mgc = g.minimal_generator_count()
        lines.append(f"minimal generator count {mgc}")
        payload["minimal_generator_count"] = mgc
    return _emit(args, lines, payload)


# ---------------------------------------------------------------------------
# analyze / build


def _triangulation_report(t: Triangulation, cap: int) -> tuple[list[str], dict]:
    lines = [
        f"simplices {t.simplex_count}",
        f"pairings {len(t.pairings)}",
    ]
    payload: dict = {
        "simplices": t.simplex_count,
        "pairings": len(t.pairings),
        "free_facets": len(t.free_facets),
    }
    if not t.is_closed:
        lines.append(f"{len(t.free_facets)} free facets — boundary complex")
        aut = automorphism_group(t, cap=cap)
        lines.append(f"automorphisms {aut.order}")
        payload["closed"] = False
        payload["automorphisms"] = aut.order
        return lines, payload

    o = orientability(t)
    orientable = isinstance(o, OrientationAssignment)
    vol = manifold_volume(t.simplex_count)
    aut = automorphism_group(t, cap=cap)
    free = action_is_free(t, aut)
    cusps = cusp_descriptors(t)
    lines.append("closed")
    lines.append(f"orientable {'yes' if orientable else 'no'}")
    lines.append(f"volume {vol}")
    lines.append(f"automorphisms {aut.order}")
    if orientable:
        plus = orientation_preserving_subgroup(t, o, aut)
        lines.append(f"orientation-preserving automorphisms {plus.order}")
        payload["orientation_preserving"] = plus.order
    lines.append(f"action free {'yes' if free else 'no'}")
    lines.append(f"cusps {len(cusps)}")
    for d in cusps:
        lines.append(d.report_line())
    payload.update(
        {
            "closed": True,
            "orientable": orientable,
            "volume": _volume_json(vol),
            "automorphisms": aut.order,
            "action_free": free,
            "cusps": [
                {
                    "h": d.h,
                    "rotation_parity": d.rotation_parity,
                    "p_exponent": d.monodromy[0],
                    "mapping_class": d.mapping_class,
                    "max_section_volume": _volume_json(d.max_section_volume),
                    "base_slot": list(d.base_slot[:2]) + [d.base_slot[2]],
                }
                for d in cusps
            ],
        }
    )
    return lines, payload


def cmd_analyze(args) -> int:
    t = Triangulation.from_text(Path(args.tri_file).read_text())
    lines, payload = _triangulation_report(t, args.cap)
    return _emit(args, lines, payload)


def _graphs_for_census(two_n: int, needed: int):
    asym = [g for g in cubic_graphs(two_n) if is_asymmetric(g)]
    if len(asym) < needed:
        raise ValueError(
            f"not enough asymmetric graphs at this size: "
            f"need {needed}, found {len(asym)} on {two_n} vertices"
        )
    return asym


def cmd_build(args) -> int:
    group = _load_group(args.group_file)
    m = len(group.generators)
    if args.mode == "edge":
        t = realize_group(group)
    else:
        if args.graphs_size is not None:
            two_n = args.graphs_size
            chosen = _graphs_for_census(two_n, 5 * m)[: 5 * m]
        else:
            chosen = None
            for two_n in (12, 14):
                asym = [g for g in cubic_graphs(two_n) if is_asymmetric(g)]
                if len(asym) >= 5 * m:
                    chosen = asym[: 5 * m]
                    break
            if chosen is None:
                raise ValueError(
                    f"not enough asymmetric graphs at any supported size for {5 * m} connectors"
                )
        t = realize_group_census(group, chosen)
    if args.out:
        Path(args.out).write_text(t.to_text())
    lines, payload = _triangulation_report(t, args.cap)
    lines.insert(0, f"group order {group.order}, {m} generators, mode {args.mode}")
    payload["group_order"] = group.order
    payload["mode"] = args.mode
    if args.out:
        lines.append(f"written to {args.out}")
        payload["out"] = args.out
    return _emit(args, lines, payload)


# ---------------------------------------------------------------------------
# latcheck


def _fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cmd_latcheck(args) -> int:
    n = args.n
    if args.case is None:
        q = q_matrix(n)
        radius = search_radius(q)
        sols = short_vectors(q, Fraction(9))
        filtered = condition_filter(sols)
        lines = [f"Q({n}) rows:"]
        for row in q.entries:
            lines.append("  [" + ", ".join(_fraction_text(x) for x in row) + "]")
        lines.append(f"R {radius}")
        lines.append(f"solutions before condition filter {len(sols)}")
        lines.append("filtered solutions:")
        for v in filtered:
            lines.append(f"  {tuple(v.coords)}")
        payload = {
            "n": n,
            "q": [[_fraction_text(x) for x in row] for row in q.entries],
            "radius": radius,
            "solutions": len(sols),
            "filtered": [list(v.coords) for v in filtered],
        }
        return _emit(args, lines, payload)

    h_text, _, parity = args.case.partition(",")
    try:
        h = int(h_text)
    except ValueError:
        raise ValueError(f"bad case {args.case!r}; expected like '1,even'")
    if parity not in ("even", "odd"):
        raise ValueError(f"bad case parity {parity!r}; expected 'even' or 'odd'")
    verdict = rigidity_case(h, parity, n)
    lines = [f"case h={h} r_c={parity} n={n}"]
    lines.append("filtered solutions:")
    for v in verdict.filtered:
        lines.append(f"  {tuple(v.coords)}")
    lines.append(f"standard shortest pair {'yes' if verdict.pair_is_standard else 'no'}")
    lines.append(f"translation action {'yes' if verdict.translation_action else 'no'}")
    if verdict.note:
        lines.append(f"note: {verdict.note}")
    payload = {
        "n": n,
        "h": h,
        "rc_parity": parity,
        "filtered": [list(v.coords) for v in verdict.filtered],
        "pair_is_standard": verdict.pair_is_standard,
        "translation_action": verdict.translation_action,
        "note": verdict.note,
    }
    return _emit(args, lines, payload)


# ---------------------------------------------------------------------------
# census


@dataclass(frozen=True)
class CensusReport:
    """Counts and fingerprints for a census run."""

    k: int
    cubic_count: int
    asymmetric_count: int
    collections_available: int
    fingerprints: tuple[dict, ...]
    pairwise_nonisomorphic: bool


def run_census(k: int, group: FiniteGroup, count: int) -> CensusReport:
    """Build ``count`` collections of asymmetric graphs on 2k vertices and
    the triangulations they produce; verify pairwise non-isomorphism."""
    from .triangulation import isomorphisms_between

    m = len(group.generators)
    gs = cubic_graphs(2 * k)
    asym = [g for g in gs if is_asymmetric(g)]
    if len(asym) < 5 * m:
        raise ValueError(
            f"not enough asymmetric graphs at this k: need {5 * m}, "
            f"found {len(asym)} on {2 * k} vertices"
        )
    available = math.comb(len(asym), 5 * m)
    if count > available:
        raise ValueError(
            f"only {available} distinct collections available, {count} requested"
        )
    chosen = list(islice(combinations(range(len(asym)), 5 * m), count))
    builds = []
    fingerprints = []
    for sel in chosen:
        t = realize_group_census(group, [asym[i] for i in sel])
        cusps = cusp_descriptors(t)
        builds.append(t)
        fingerprints.append(
            {
                "graphs": list(sel),
                "simplices": t.simplex_count,
                "cusps": len(cusps),
                "volume": str(manifold_volume(t.simplex_count)),
            }
        )
    nontrivial = True
    for a in range(len(builds)):
        for b in range(a + 1, len(builds)):
            fa = {k2: v for k2, v in fingerprints[a].items() if k2 != "graphs"}
            fb = {k2: v for k2, v in fingerprints[b].items() if k2 != "graphs"}
            if fa != fb:
                continue
            if isomorphisms_between(builds[a], builds[b], limit=1):
                nontrivial = False
    return CensusReport(
        k=k,
        cubic_count=len(gs),
        asymmetric_count=len(asym),
        collections_available=available,
        fingerprints=tuple(fingerprints),
        pairwise_nonisomorphic=nontrivial,
    )


def cmd_census(args) -> int:
    group = _load_group(args.group_file) if args.group_file else cyclic_group(2)
    report = run_census(args.k, group, args.count)
    m_gen = len(group.generators)
    lines = [
        f"k {report.k}",
        f"cubic graphs g {report.cubic_count}",
        f"asymmetric f {report.asymmetric_count}",
        f"collections available {report.collections_available}",
    ]
    predicted = 2 * group.order * m_gen + 5 * group.order * m_gen * (8 * args.k - 2)
    lines.append(f"predicted simplices per build {predicted}")
    for i, fp in enumerate(report.fingerprints):
        lines.append(
            f"collection {i}: graphs {fp['graphs']} simplices {fp['simplices']} "
            f"cusps {fp['cusps']} volume {fp['volume']}"
        )
    lines.append(
        f"pairwise non-isomorphic {'yes' if report.pairwise_nonisomorphic else 'no'}"
    )
    payload = {
        "k": report.k,
        "cubic_count": report.cubic_count,
        "asymmetric_count": report.asymmetric_count,
        "collections_available": report.collections_available,
        "predicted_simplices": predicted,
        "fingerprints": list(report.fingerprints),
        "pairwise_nonisomorphic": report.pairwise_nonisomorphic,
    }
    return _emit(args, lines, payload)


# ---------------------------------------------------------------------------
# examples


def cmd_examples(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    k6 = k6_glueing_graph()
    octa = boundary_graph(k6, 1)
    prism = klein_graph(octa, 2)
    written = []

    def save(name: str, text: str):
        (out / name).write_text(text)
        written.append(name)

    save("k6_glueing.graph", k6.to_exchange_text())
    save("k6_glueing.dot", k6.to_dot())
    save("octahedron.graph", octa.to_exchange_text())
    save("octahedron.dot", octa.to_dot())
    save("prism.graph", prism.to_exchange_text())
    save("prism.dot", prism.to_dot())
    save("edge_complex.tri", edge_complex().to_text())
    save("edge_complex_chain2.tri", edge_complex_chain(2).to_text())
    save("edge_complex_chain3.tri", edge_complex_chain(3).to_text())
    save("one_cusped.tri", one_cusped_triangulation().to_text())
    save("double_of_simplex.tri", double_of_simplex().to_text())

    lines = [f"written {len(written)} files to {out}"] + [f"  {n}" for n in written]
    payload = {"out": str(out), "files": written}
    return _emit(args, lines, payload)


# ---------------------------------------------------------------------------
# parser and entry point


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentasym",
        description="Triangulations of hyperbolic 4-manifolds with prescribed symmetries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("group", help="inspect a finite group file")
    p.add_argument("group_file")
    add_format(p)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("build", help="realize a group as a triangulation symmetry group")
    p.add_argument("group_file")
    p.add_argument("--mode", choices=("edge", "graph"), default="edge")
    p.add_argument("--out", help="write the triangulation file here")
    p.add_argument(
        "--graphs-size", type=int, default=None,
        help="vertex count of the asymmetric cubic connector graphs (graph mode)",
    )
    p.add_argument("--cap", type=int, default=2048)
    add_format(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="full invariant report of a triangulation file")
    p.add_argument("tri_file")
    p.add_argument("--cap", type=int, default=2048)
    add_format(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("latcheck", help="exact lattice certificates")
    p.add_argument("--n", type=int, choices=(0, 1, 2), default=0)
    p.add_argument("--case", help="rigidity case as 'h,parity', e.g. '1,even'")
    add_format(p)
    p.set_defaults(func=cmd_latcheck)

    p = sub.add_parser("census", help="asymmetric-graph census of triangulations")
    p.add_argument("--k", type=int, required=True, help="graphs have 2k vertices")
    p.add_argument("--count", type=int, default=2, help="collections to build")
    p.add_argument("--group-file", default=None, help="group file (default: order-2 cyclic)")
    add_format(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("examples", help="write the fixed example objects")
    p.add_argument("--out", default=".")
    add_format(p)
    p.set_defaults(func=cmd_examples)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except (PentasymError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
