#!/usr/bin/env python3
"""Regenerate the shipped graph6 catalogues of all graphs on 1..7 vertices.

Uses the networkx atlas as the external source of nonisomorphic graphs
(counts cross-checked against OEIS A000088: 1, 2, 4, 11, 34, 156, 1044).
networkx is a development-only dependency; the generated files are committed
together with their SHA256SUMS.
"""

import hashlib
import pathlib
import sys

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from poscol.graph6 import graph6_encode  # noqa: E402
from poscol.graphs import build_graph  # noqa: E402

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def main() -> None:
    data_dir = pathlib.Path(__file__).resolve().parents[1] / "src" / "poscol" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    by_n: dict[int, list[str]] = {n: [] for n in EXPECTED}
    for G in graph_atlas_g()[1:]:
        n = G.number_of_nodes()
        if n in by_n:
            mapping = {v: i for i, v in enumerate(sorted(G.nodes()))}
            edges = [(mapping[u], mapping[v]) for u, v in G.edges()]
            by_n[n].append(graph6_encode(build_graph(n, edges)))
    for n, lines in by_n.items():
        assert len(lines) == EXPECTED[n], (n, len(lines))
        path = data_dir / f"graphs{n}.g6"
        path.write_text("\n".join(lines) + "\n")
        print(path.name, len(lines))
    sums = []
    for name in sorted(p.name for p in data_dir.iterdir() if p.suffix in (".g6", ".cnf")):
        digest = hashlib.sha256((data_dir / name).read_bytes()).hexdigest()
        sums.append(f"{digest}  {name}")
    (data_dir / "SHA256SUMS").write_text("\n".join(sums) + "\n")


if __name__ == "__main__":
    main()
