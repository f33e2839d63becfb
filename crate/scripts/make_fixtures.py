"""Regenerate the graph6 fixtures and manifest with networkx.

Usage: python3 scripts/make_fixtures.py [fixtures-dir]
"""
import itertools
import sys
from pathlib import Path

import networkx as nx


def coxeter():
    # Kneser graph KG(7,3) minus the seven lines of a Fano plane
    lines = {frozenset(s) for s in [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]}
    pts = [frozenset(c) for c in itertools.combinations(range(7), 3) if frozenset(c) not in lines]
    g = nx.Graph()
    g.add_nodes_from(range(len(pts)))
    g.add_edges_from((i, j) for i, j in itertools.combinations(range(len(pts)), 2) if not pts[i] & pts[j])
    return g


def generalized_petersen(n, k):
    g = nx.Graph()
    for i in range(n):
        g.add_edges_from([(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)])
    return g


GRAPHS = [
    # name, builder, source
    ("petersen", nx.petersen_graph, "networkx petersen_graph"),
    ("heawood", nx.heawood_graph, "networkx heawood_graph"),
    ("pappus", nx.pappus_graph, "networkx pappus_graph"),
    ("desargues", nx.desargues_graph, "networkx desargues_graph"),
    ("coxeter", coxeter, "KG(7,3) minus Fano-plane lines"),
    ("nauru", lambda: generalized_petersen(12, 5), "generalized Petersen GP(12,5)"),
    ("dodecahedron", nx.dodecahedral_graph, "networkx dodecahedral_graph"),
    ("hexahedron", nx.cubical_graph, "networkx cubical_graph"),
    ("icosahedron", nx.icosahedral_graph, "networkx icosahedral_graph"),
    ("octahedron", nx.octahedral_graph, "networkx octahedral_graph"),
    ("tutte_coxeter", lambda: nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5), "LCF [-13,-9,7,-7,9,13]^5"),
    ("moebius_kantor", lambda: generalized_petersen(8, 3), "generalized Petersen GP(8,3)"),
    ("truncated_tetrahedron", nx.truncated_tetrahedron_graph, "networkx truncated_tetrahedron_graph"),
    ("franklin", lambda: nx.LCF_graph(12, [5, -5], 6), "LCF [5,-5]^6"),
    ("wagner", lambda: nx.LCF_graph(8, [4], 8), "LCF [4]^8"),
    ("dyck", lambda: nx.LCF_graph(32, [5, -5, 13, -13], 8), "LCF [5,-5,13,-13]^8"),
    ("f26a", lambda: nx.LCF_graph(26, [-7, 7], 13), "LCF [-7,7]^13"),
    ("thomsen", lambda: nx.complete_bipartite_graph(3, 3), "K_{3,3}"),
    ("hoffman_singleton", nx.hoffman_singleton_graph, "networkx hoffman_singleton_graph"),
]

SLOW_N = 70


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures")
    out.mkdir(parents=True, exist_ok=True)
    rows = ["name\tfile\tslow\tsource"]
    for name, build, source in GRAPHS:
        g = nx.convert_node_labels_to_integers(build())
        text = nx.to_graph6_bytes(g, header=False)
        (out / f"{name}.g6").write_bytes(text)
        rows.append(f"{name}\t{name}.g6\t{'yes' if g.number_of_nodes() > SLOW_N else 'no'}\t{source}")
    (out / "manifest.tsv").write_text("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
