"""Catalog enumeration: completeness, non-redundancy, canonical-form sanity.

The independent oracle canonicalizes by minimizing the edge bit string over
all n! vertex permutations, with no refinement shortcuts.
"""

import random
from itertools import permutations

from eil.catalog import CLASS_COUNTS, all_graphs, canonical_key, graph_classes
from eil.graphs import Graph, random_graph


def brute_canonical(n, adj):
    best = None
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if adj[i] & (1 << j)]
    for perm in permutations(range(n)):
        mask = 0
        for i, j in edges:
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            mask |= 1 << (b * (b - 1) // 2 + a)
        if best is None or mask < best:
            best = mask
    return best if best is not None else 0


def test_class_counts_match_known_sequence():
    for n in range(8):
        assert len(graph_classes(n)) == CLASS_COUNTS[n]


def test_no_two_entries_isomorphic_n5():
    keys = [brute_canonical(5, adj) for adj in graph_classes(5)]
    assert len(set(keys)) == len(keys)


def test_every_labeled_graph_represented_n5():
    catalog_keys = {brute_canonical(5, adj) for adj in graph_classes(5)}
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    for mask in range(1 << len(pairs)):
        adj = [0] * 5
        for bit, (i, j) in enumerate(pairs):
            if mask & (1 << bit):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        assert brute_canonical(5, tuple(adj)) in catalog_keys


def test_canonical_key_separates_exactly_like_bruteforce_n4():
    # same partition of all labeled graphs into classes, even though the two
    # canonical forms pick different representatives
    pairs = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    by_fast = {}
    by_brute = {}
    for mask in range(1 << len(pairs)):
        adj = [0] * 4
        for bit, (i, j) in enumerate(pairs):
            if mask & (1 << bit):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        adj = tuple(adj)
        by_fast.setdefault(canonical_key(4, adj), set()).add(adj)
        by_brute.setdefault(brute_canonical(4, adj), set()).add(adj)
    assert sorted(by_fast.values(), key=sorted) == sorted(by_brute.values(), key=sorted)


def test_canonical_key_invariant_under_relabeling():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(2, 7)
        G = random_graph(n, rng)
        perm = list(range(n))
        rng.shuffle(perm)
        adj2 = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if G.adj[i] & (1 << j):
                    a, b = perm[i], perm[j]
                    adj2[a] |= 1 << b
                    adj2[b] |= 1 << a
        assert canonical_key(n, G.adj) == canonical_key(n, tuple(adj2))


def test_all_graphs_shapes(catalog6):
    assert len(catalog6) == sum(CLASS_COUNTS[1:7]) == 208
    assert all(isinstance(G, Graph) for G in catalog6)
    assert {G.n for G in catalog6} == {1, 2, 3, 4, 5, 6}


def test_all_graphs_min_n():
    only6 = list(all_graphs(6, min_n=6))
    assert len(only6) == 156
