#!/usr/bin/env python3
"""Independent validation of the bundled graph corpora using networkx.

Checks, for each tests/data/connected_N.g6:
  * every line parses as graph6 with exactly N vertices,
  * every graph is connected,
  * the list is pairwise non-isomorphic (invariant buckets + is_isomorphic),
  * for N <= 7 the list is isomorphism-equivalent to the connected graphs
    of the networkx atlas (which is complete up to 7 vertices).
"""

import sys
from collections import Counter, defaultdict
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

DATA = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/data")


def invariant(g):
    degs = tuple(sorted(d for _, d in g.degree()))
    tri = tuple(sorted(nx.triangles(g).values()))
    return (g.number_of_nodes(), g.number_of_edges(), degs, tri)


def check_pairwise_noniso(graphs, label):
    buckets = defaultdict(list)
    for g in graphs:
        buckets[invariant(g)].append(g)
    for inv, bucket in buckets.items():
        for i in range(len(bucket)):
            for j in range(i + 1, len(bucket)):
                if nx.is_isomorphic(bucket[i], bucket[j]):
                    raise SystemExit(f"{label}: isomorphic duplicates found")
    print(f"{label}: pairwise non-isomorphic ok "
          f"({len(graphs)} graphs, {len(buckets)} invariant buckets)")


def atlas_connected(n):
    return [g for g in graph_atlas_g()
            if g.number_of_nodes() == n and n > 0 and nx.is_connected(g)]


def match_atlas(graphs, atlas, label):
    if len(graphs) != len(atlas):
        raise SystemExit(f"{label}: count differs from atlas")
    buckets = defaultdict(list)
    for g in atlas:
        buckets[invariant(g)].append(g)
    for g in graphs:
        bucket = buckets.get(invariant(g), [])
        hit = next((i for i, a in enumerate(bucket)
                    if nx.is_isomorphic(g, a)), None)
        if hit is None:
            raise SystemExit(f"{label}: graph missing from atlas")
        bucket.pop(hit)
    print(f"{label}: atlas match ok")


def main():
    expected = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
    for n in range(1, 9):
        path = DATA / f"connected_{n}.g6"
        lines = path.read_text().split()
        if len(lines) != expected[n]:
            raise SystemExit(f"{path}: expected {expected[n]} lines")
        if lines != sorted(lines) or len(set(lines)) != len(lines):
            raise SystemExit(f"{path}: not sorted/unique")
        graphs = [nx.from_graph6_bytes(l.encode()) for l in lines]
        for g in graphs:
            if g.number_of_nodes() != n:
                raise SystemExit(f"{path}: wrong vertex count")
            if not nx.is_connected(g):
                raise SystemExit(f"{path}: disconnected graph")
        check_pairwise_noniso(graphs, f"n={n}")
        if n <= 7:
            match_atlas(graphs, atlas_connected(n), f"n={n}")
    print("all corpus checks passed")


if __name__ == "__main__":
    main()
