"""Regenerate data/refined_names.txt: cross the representative triple of
each row of the refined adjacency table and record the refined code under
the row's name.  Line walls that do not split keep their plain name.

usage: python tools/name_refined_walls.py [--write]
"""
from __future__ import annotations

import argparse

from rp2conf import catalog, golden, walls


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--write", action="store_true")
    args = ap.parse_args(argv)
    reps = catalog.seven_representatives()
    named = {}
    for row in golden.refined_adjacency():
        cr = walls.cross_line_wall(reps[row.representative], row.triple)
        code = walls.refined_code_text(walls.refined_wall_code(cr.at_wall))
        if code in named and named[code] != row.wall:
            raise SystemExit(f"{row.wall} and {named[code]} have the same refined code")
        named[code] = row.wall
    split = {n.split("_")[0] for n in named.values()}
    for c in walls.catalog_line_crossings():
        name = walls.wall_names()[c.result.wall.code]
        code = walls.refined_code_text(c.result.wall.refined)
        if name not in split:
            named.setdefault(code, name)
        elif code not in named:
            raise SystemExit(f"refined wall of {name} at {c.start} {c.triple} is not in the table")
    lines = [f"{n} {code}" for code, n in sorted(named.items(), key=lambda kv: (int(kv[1][1:].split('_')[0]), kv[1]))]
    text = "# refined line walls: name, labelled L-sequence, inside bits (point:conic)\n" + "\n".join(lines) + "\n"
    if args.write:
        with open("src/rp2conf/data/refined_names.txt", "w", encoding="utf-8") as f:
            f.write(text)
    else:
        print(text, end="")


if __name__ == "__main__":
    main()
