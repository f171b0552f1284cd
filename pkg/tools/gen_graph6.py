#!/usr/bin/env python3
"""Write all non-isomorphic graphs on n vertices as a graph6 file.

Stand-in for ``geng n``: extends every class on n-1 vertices by one vertex
with each possible neighbourhood and deduplicates with nauty certificates
(via pynauty). Only used to produce the n = 8, 9 fixtures; not a package
dependency.

    python tools/gen_graph6.py 8 tests/data/graphs8.g6.gz
"""

import argparse
import gzip
import sys

import pynauty

from domgame.graph import Graph, write_graph6


def _cert(n, adj):
    pg = pynauty.Graph(n, adjacency_dict={v: [u for u in range(n) if adj[v] >> u & 1]
                                          for v in range(n)})
    return pynauty.certificate(pg)


def generate(n):
    level = {b"": []}
    for k in range(1, n + 1):
        nxt = {}
        for adj in level.values():
            for nbrs in range(1 << (k - 1)):
                new = [r | ((nbrs >> v & 1) << (k - 1)) for v, r in enumerate(adj)] + [nbrs]
                c = _cert(k, new)
                if c not in nxt:
                    nxt[c] = new
        level = nxt
        print(f"n={k}: {len(level)} graphs", file=sys.stderr)
    return [Graph(n, adj) for adj in level.values()]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("n", type=int)
    ap.add_argument("out")
    args = ap.parse_args()
    lines = sorted(write_graph6(g) for g in generate(args.n))
    opener = gzip.open if args.out.endswith(".gz") else open
    with opener(args.out, "wt") as fh:
        for line in lines:
            fh.write(line + "\n")


if __name__ == "__main__":
    main()
