"""Regenerate src/khtwist/data/corpus.txt.

Every entry is validated before it is written: planar, connected, alternating,
reduced, prime, with the advertised crossing number, and (for two-bridge
entries) with knot determinant p, checked via spanning trees of the Tait
graph.  Rolfsen names are only assigned where the (crossing number,
determinant) pair pins the knot, i.e. for rational knots through 7 crossings.
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from khtwist.diagram import is_alternating, is_prime_diagram, is_reduced, to_pd_text
from khtwist.families import (
    hopf,
    pretzel,
    rolfsen_name,
    twist_chain,
    two_bridge,
    two_bridge_census,
)
from khtwist.tait import spanning_tree_count, tait_graphs

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "khtwist" / "data" / "corpus.txt"


def validate(d, expect_n, expect_det=None):
    assert d.connected, d.name
    assert is_alternating(d), d.name
    assert is_reduced(d), d.name
    assert is_prime_diagram(d), d.name
    assert d.n == expect_n, (d.name, d.n, expect_n)
    if expect_det is not None:
        det = spanning_tree_count(tait_graphs(d)[0])
        assert det == expect_det, (d.name, det, expect_det)


def main() -> None:
    entries = []

    d = hopf()
    validate(d, 2)
    entries.append(("hopf", d))
    for k in range(2, 7):
        d = twist_chain(k)
        validate(d, k)
        entries.append((f"t2_{k}", d))

    for e in two_bridge_census(9):
        name = rolfsen_name(e.crossing_number, e.p) if e.crossing_number <= 7 else None
        name = name or f"twobridge_{e.p}_{e.q}"
        d = two_bridge(e.p, e.q, name=name)
        validate(d, e.crossing_number, expect_det=e.p)
        entries.append((name, d))

    for twists in [(2, 2, 2), (3, 2, 2), (3, 3, 2), (2, 2, 2, 2), (3, 3, 3)]:
        d = pretzel(*twists)
        validate(d, sum(twists))
        entries.append((d.name, d))

    lines = [
        "# Bundled corpus of reduced alternating diagrams.",
        "# hopf / t2_k: the (2, k) chains of bigons.",
        "# n_m: rational knots through 7 crossings under their table names",
        "#      (the (crossing number, determinant) pair identifies each).",
        "# twobridge_p_q: all remaining rational knots with 8 or 9 crossings,",
        "#      named by their canonical fraction.",
        "# pretzel_*: alternating pretzel diagrams (some are links).",
        "",
    ]
    for name, d in entries:
        lines.append(f"name: {name}")
        lines.append(to_pd_text(d))
        lines.append("")
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines), encoding="utf-8")
    print(f"wrote {len(entries)} entries to {OUT}")


if __name__ == "__main__":
    main()
