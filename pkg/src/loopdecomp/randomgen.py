"""Seeded random inputs for randomized verification sweeps.

Chordal graphs are grown by attaching each new vertex to a clique of the
existing graph, which makes the reverse insertion order a perfect
elimination ordering by construction.  Flag complexes come from random
graphs by taking clique complexes.
"""

from __future__ import annotations

from random import Random

from .complexes import SimplicialComplex, validate_complex
from .homotopy import PFactor, PProduct, loop_sphere, sphere


def random_graph_complex(m: int, rng: Random, edge_prob: float = 0.5) -> SimplicialComplex:
    facets = [[v] for v in range(1, m + 1)]
    for a in range(1, m + 1):
        for b in range(a + 1, m + 1):
            if rng.random() < edge_prob:
                facets.append([a, b])
    return validate_complex(facets, m)


def clique_complex(graph: SimplicialComplex) -> SimplicialComplex:
    adj = graph.adjacency()
    cliques = [frozenset({v}) for v in graph.vertices()]
    found = set(cliques)
    frontier = list(cliques)
    while frontier:
        nxt = []
        for c in frontier:
            top = max(c)
            for v in range(top + 1, graph.m + 1):
                if all(u in adj[v] for u in c):
                    bigger = c | {v}
                    if bigger not in found:
                        found.add(bigger)
                        nxt.append(bigger)
        frontier = nxt
    return validate_complex([sorted(c) for c in found], graph.m)


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    faces = [sorted(f) for f in K.nonempty_faces() if len(f) <= k + 1]
    return validate_complex(faces, K.m)


def random_flag_complex(m: int, rng: Random, edge_prob: float = 0.5) -> SimplicialComplex:
    return clique_complex(random_graph_complex(m, rng, edge_prob))


def random_flag_skeleton(m: int, rng: Random, edge_prob: float = 0.5) -> SimplicialComplex:
    flag = random_flag_complex(m, rng, edge_prob)
    return skeleton(flag, rng.randint(0, max(flag.dim(), 0)))


def random_chordal_graph(m: int, rng: Random) -> SimplicialComplex:
    """Chordal graph on m vertices via clique attachments."""
    cliques = [frozenset({1})]
    edges = []
    for v in range(2, m + 1):
        base = rng.choice(cliques)
        attach = [u for u in base if rng.random() < 0.7]
        edges.extend([u, v] for u in attach)
        cliques.append(frozenset(attach) | {v})
    facets = [[u] for u in range(1, m + 1)] + edges
    return validate_complex(facets, m)


def random_chordal_flag_complex(m: int, rng: Random) -> SimplicialComplex:
    return clique_complex(random_chordal_graph(m, rng))


def relabel(K: SimplicialComplex, perm: dict[int, int]) -> SimplicialComplex:
    facets = [[perm[v] for v in f] for f in K.facets]
    return validate_complex(facets, K.m)


_LOOP_DIM_CHOICES = [d for d in range(3, 17) if d not in (4, 8)]


def random_canonical_factors(rng: Random, max_bottom: int = 15) -> list[tuple[PFactor, int]]:
    factors: dict[PFactor, int] = {}
    for _ in range(rng.randint(1, 5)):
        if rng.random() < 0.4:
            f = sphere(rng.choice([1, 3, 7]))
        else:
            f = loop_sphere(rng.choice([d for d in _LOOP_DIM_CHOICES if d - 1 <= max_bottom]))
        factors[f] = factors.get(f, 0) + rng.randint(1, 3)
    return sorted(factors.items())


def random_canonical_product(rng: Random, cutoff: int = 15) -> PProduct:
    return PProduct.from_factors(random_canonical_factors(rng, cutoff), cutoff)
