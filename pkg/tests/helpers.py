"""Shared corpus builders for the test suite (seeded, reproducible)."""

from __future__ import annotations

import itertools
import random

from semlab import CactusSpec, Graph, make_cactus, make_cycle, make_two_cycle


def random_graph(rng: random.Random, p_min: int = 2, p_max: int = 8) -> Graph:
    p = rng.randint(p_min, p_max)
    pool = list(itertools.combinations(range(p), 2))
    q_cap = min(len(pool), 2 * p)
    q = rng.randint(0, q_cap)
    return Graph(p, tuple(rng.sample(pool, q)))


def random_cactus_spec(rng: random.Random, max_order: int = 8) -> CactusSpec:
    lengths = [rng.randint(3, 5)]
    attachments = []
    while True:
        extra = rng.randint(3, 5)
        # adding this cycle would give order sum+extra-(len(attachments)+1)
        if sum(lengths) + extra - len(attachments) - 1 > max_order:
            break
        cycle = rng.randrange(len(lengths))
        attachments.append((cycle, rng.randrange(lengths[cycle])))
        lengths.append(extra)
        if rng.random() < 0.5:
            break
    return CactusSpec(tuple(lengths), tuple(attachments))


def small_corpus(seed: int = 20240607, n_random: int = 60,
                 n_cacti: int = 20, p_max: int = 8) -> list[Graph]:
    """Cycles, shared-vertex two-cycles, random cacti, random graphs."""
    rng = random.Random(seed)
    graphs = [make_cycle(n) for n in range(3, p_max + 1)]
    graphs += [make_two_cycle(m, n)
               for m in range(3, p_max) for n in range(m, p_max)
               if m + n - 1 <= p_max]
    for _ in range(n_cacti):
        g = make_cactus(random_cactus_spec(rng, max_order=p_max))
        if g.order <= p_max:
            graphs.append(g)
    for _ in range(n_random):
        graphs.append(random_graph(rng, p_max=p_max))
    return graphs


def all_bijections(p: int):
    return itertools.permutations(range(1, p + 1))
