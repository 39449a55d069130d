"""Command line front end: ``rp2conf <command> ...``.

Exit codes: 0 success, 1 census failure, unknown class or blocked crossing,
2 golden mismatch, 3 parse error, 4 degenerate input where a generic one is required.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, tables, walls
from .census import run_census
from .classify import GREEK, UnknownClass, seven_class, seven_data, six_class, six_data, six_fingerprint_of, seven_fingerprint_of
from .exact import GeometryError, genericity_report
from .paths import PathBlocked
from .pencils import combinatorial_pencil

EXIT_OK, EXIT_FAIL, EXIT_GOLDEN, EXIT_PARSE, EXIT_DEGENERATE = 0, 1, 2, 3, 4


class ParseError(ValueError):
    pass


def read_points(path: str) -> dict[int, tuple[int, int, int]]:
    """PointFile: one point "x0 x1 x2" per line (integers or rationals),
    '#' comments, labels 1.. by line order."""
    try:
        with open(path, encoding="utf-8") if path != "-" else sys.stdin as f:
            lines = [ln.split("#")[0].strip() for ln in f]
    except OSError as e:
        raise ParseError(str(e)) from None
    lines = [ln for ln in lines if ln]
    if len(lines) not in (6, 7):
        raise ParseError(f"expected 6 or 7 points, found {len(lines)}")
    try:
        pts = catalog.parse_points(lines)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(str(e)) from None
    for k, v in pts.items():
        if not any(v):
            raise ParseError(f"point {k} has all coordinates zero")
    return pts


def _fp_hex(fp) -> str:
    import hashlib

    return hashlib.sha256(repr(fp).encode()).hexdigest()[:32]


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=2, sort_keys=True) + "\n" if args.format == "json" else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(out)
    else:
        sys.stdout.write(out)


def _degenerate_report(pts) -> tuple[dict, str]:
    d = walls.degeneracy_detect(pts)
    info: dict = {"generic": False, "degeneracy": d.kind, "labels": [list(x) if isinstance(x, tuple) else x for x in d.labels]}
    lines = [f"degenerate: {d.kind} {d.labels}"]
    try:
        if len(pts) == 7 and d.kind == walls.COLLINEAR:
            w = walls.line_wall_class(pts)
            info.update(wall=w.name, sequence=w.sequence)
            lines.append(f"line wall {w.name}: {w.sequence}")
            if not w.name:
                lines[-1] = f"line wall (unnamed): {w.sequence}"
            try:
                r = walls.refined_wall_fingerprint(pts)
                info["refined"] = r.name
                lines.append(f"refined wall {r.name}")
            except GeometryError:
                pass
        elif len(pts) == 7 and d.kind == walls.COCONIC:
            w = walls.conic_wall_class(pts)
            info.update(wall=w.name, inside=w.inside, conic=list(w.diagram[0]), pencil=list(w.diagram[1]))
            lines.append(f"conic wall {w.name} (apex {'inside' if w.inside else 'outside'})")
        elif len(pts) == 6 and d.kind == walls.COLLINEAR:
            w = walls.line_wall_class(pts)
            info.update(wall=w.name, sequence=w.sequence)
            lines.append(f"line wall {w.name}: {w.sequence}")
    except (GeometryError, KeyError) as e:
        lines.append(f"wall not classified: {e}")
    return info, "\n".join(lines) + "\n"


def cmd_classify(args) -> int:
    pts = read_points(args.file)
    if not genericity_report(pts).fully_generic:
        info, text = _degenerate_report(pts)
        _emit(args, info, text)
        return EXIT_DEGENERATE
    if len(pts) == 6:
        data = six_data(pts)
        cls = six_class(data)
        pencils = {n: " ".join(str(m) for m in combinatorial_pencil(pts, n).members) for n in pts}
        payload = {
            "points": 6,
            "class": cls.name,
            "symbol": cls.symbol,
            "interior_count": cls.interior_count,
            "interior": {str(n): data.interior[n] for n in pts},
            "pencils": {str(n): p for n, p in pencils.items()},
            "fingerprint": _fp_hex(six_fingerprint_of(data)),
        }
        lines = [f"class {cls.symbol} ({cls.name}), {cls.interior_count} interior points"]
        for n in pts:
            side = "<" if data.interior[n] else ">"
            lines.append(f"  {n} {side} {''.join(map(str, data.words[n]))} | {pencils[n]}")
        lines.append(f"fingerprint {payload['fingerprint']}")
    else:
        data = seven_data(pts)
        cls = seven_class(data)
        payload = {
            "points": 7,
            "class": cls.name,
            "quadruple": str(cls.quadruple),
            "subs": {str(n): data.sub_names[n] for n in pts},
            "cubics": {str(n): str(data.descriptors[n]) for n in pts},
            "interior": sorted(f"{x}<{''.join(map(str, sorted(five)))}" for (x, five), v in data.interior.items() if v),
            "fingerprint": _fp_hex(seven_fingerprint_of(data)),
        }
        lines = [f"class {cls.name}, quadruple {cls.quadruple}"]
        for n in pts:
            lines.append(f"  without {n}: {GREEK[data.sub_names[n]]}   cubic {data.descriptors[n]}")
        lines.append("interior: " + " ".join(payload["interior"]))
        lines.append(f"fingerprint {payload['fingerprint']}")
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_tables(args) -> int:
    names = args.only or list(tables.CHECKS)
    unknown = [n for n in names if n not in tables.CHECKS]
    if unknown:
        raise ParseError(f"unknown tables {unknown}; choose from {list(tables.CHECKS)}")
    results = tables.run(names)
    payload = {t.name: {"rows": t.rows, "diffs": t.diffs, "errata": t.errata} for t in results}
    lines = []
    for t in results:
        lines.append(f"[{t.name}] {'ok' if t.ok else 'MISMATCH'}")
        if args.verbose:
            lines.extend("  " + r for r in t.rows)
        lines.extend("  diff: " + d for d in t.diffs)
        lines.extend("  erratum: " + e for e in t.errata)
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK if all(t.ok for t in results) else EXIT_GOLDEN


def cmd_census(args) -> int:
    r = run_census(args.kind, args.samples, args.seed, args.bound, args.jobs)
    payload = {
        "kind": r.kind,
        "samples": r.samples,
        "seed": args.seed,
        "bound": args.bound,
        "classes": dict(sorted(r.histogram.items())),
        "distinct": len(r.histogram),
        "rejected": r.rejected,
        "failures": [{"index": i, "error": e} for i, e in r.failures],
    }
    if r.kind == "six":
        payload["fingerprints"] = len(r.fingerprints)
    lines = [f"{r.kind} points: {r.samples} samples (seed {args.seed}, bound {args.bound}), {r.rejected} rejected draws"]
    for name, n in sorted(r.histogram.items()):
        label = GREEK.get(name, name)
        lines.append(f"  {label:<14} {n}")
    lines.append(f"{len(r.histogram)} classes, {len(r.failures)} failures")
    lines.extend(f"  sample {i}: {e}" for i, e in r.failures[:20])
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK if r.ok else EXIT_FAIL


def cmd_graph(args) -> int:
    g = walls.adjacency_graph(args.level, args.conics)
    fmt = args.format
    if fmt == "dot":
        text = g.to_dot()
    elif fmt == "json":
        text = json.dumps(g.to_dict(), indent=2, sort_keys=True) + "\n"
    else:
        lines = [f"level {g.level}, {'lines+conics' if g.conics else 'lines-only'}: {len(g.vertices)} vertices, {len(g.edges)} edges, {len(g.wall_classes())} wall classes"]
        lines.extend(f"  {e.ends[0]} -- {e.ends[1]}  {e.wall.name}" for e in g.edges)
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_representatives(args) -> int:
    cat = catalog.representatives_catalog()
    payload = {kind: {name: {str(k): list(v) for k, v in pts.items()} for name, pts in entries.items()} for kind, entries in cat.items()}
    lines = [f"# catalog version {catalog.CATALOG_VERSION}"]
    for kind, entries in cat.items():
        for name, pts in entries.items():
            lines.append(f"[{kind} {name}]")
            lines.append(catalog.format_points(pts).rstrip("\n"))
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK


def _parse_wall(text: str):
    if text == "conic":
        return "conic"
    if text.startswith("conic:") and text[6:].isdigit():
        return int(text[6:])
    if len(text) != 3 or not text.isdigit():
        raise ParseError(f"wall must be a triple such as 456, 'conic' or 'conic:<apex>', not {text!r}")
    return tuple(int(c) for c in text)


def cmd_cross(args) -> int:
    pts = read_points(args.file)
    if not genericity_report(pts).fully_generic:
        info, text = _degenerate_report(pts)
        _emit(args, info, text)
        return EXIT_DEGENERATE
    wall = _parse_wall(args.wall)
    if isinstance(wall, tuple) and (len(set(wall)) != 3 or not set(wall) <= set(pts)):
        raise ParseError(f"a wall triple needs three distinct labels among {sorted(pts)}")
    if isinstance(wall, int) and (len(pts) != 7 or wall not in pts):
        raise ParseError(f"apex {wall} is not a label of a seven-point file")
    if wall == "conic" and len(pts) == 7:
        raise ParseError("with seven points name the apex: conic:<label>")
    try:
        r = walls.cross_wall(pts, wall, refined=args.refined and len(pts) == 7)
    except PathBlocked as e:
        _emit(args, {"error": str(e)}, f"blocked: {e}\n")
        return EXIT_FAIL
    payload = {
        "wall": r.wall.name,
        "kind": r.wall.kind,
        "sequence": r.wall.sequence,
        "before": r.before_class,
        "after": r.after_class,
        "mover": r.crossing.mover,
        "after_points": {str(k): list(v) for k, v in r.after.items()},
    }
    lines = [
        f"{r.before_class} -- {r.wall.name} --> {r.after_class}",
        f"moving point {r.crossing.mover}" + (f", sequence {r.wall.sequence}" if r.wall.sequence else ""),
        "far side:",
        catalog.format_points(r.after).rstrip("\n"),
    ]
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rp2conf", description="Configurations of six and seven points in the real projective plane.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", help="write to this file instead of stdout")

    p = sub.add_parser("classify", help="classify a point file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tables", help="regenerate the tables and diff them with the golden copies")
    p.add_argument("--only", nargs="*", help=f"subset of {list(tables.CHECKS)}")
    p.add_argument("-v", "--verbose", action="store_true", help="print the regenerated rows")
    common(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("census", help="classify random configurations")
    p.add_argument("--kind", choices=("six", "seven", "coconic"), default="seven")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--bound", type=int, default=50)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("graph", help="adjacency graph of cameras and walls")
    p.add_argument("--level", type=int, choices=(6, 7), default=7)
    p.add_argument("--conics", action="store_true", help="include conic walls")
    common(p, ("text", "json", "dot"))
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("representatives", help="dump the representative catalog")
    common(p)
    p.set_defaults(func=cmd_representatives)

    p = sub.add_parser("cross", help="cross one wall of a generic configuration")
    p.add_argument("file")
    p.add_argument("wall", help="triple such as 456 (first label moves), 'conic' or 'conic:<apex>'")
    p.add_argument("--refined", action="store_true", help="name the refined line wall")
    common(p)
    p.set_defaults(func=cmd_cross)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "samples", 1) < 1 or getattr(args, "bound", 2) < 2:
        print("error: --samples must be >= 1 and --bound >= 2", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except GeometryError as e:
        print(f"degenerate input: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    except UnknownClass as e:
        print(f"unclassified: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
