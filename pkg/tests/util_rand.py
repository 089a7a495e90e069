"""Feasible random-graph helpers shared by the test modules."""

import random

from cactus_center.gen import random_cactus, random_instance, random_tree


def small_cactus(rng: random.Random, vmax: int = 14, max_cycles: int = 3,
                 cycle_max: int = 5):
    v = rng.randint(2, vmax)
    fit = max(0, (v - 2) // (cycle_max - 1))
    c = rng.randint(0, min(max_cycles, fit))
    return random_cactus(rng, v, c, 2, cycle_max)


def small_instance(rng: random.Random, vmax: int = 14, nmax: int = 5,
                   mmax: int = 4, interior_frac: float = 0.5,
                   constant_hi: float = 0.0, max_cycles: int = 3):
    g = small_cactus(rng, vmax, max_cycles=max_cycles)
    n = rng.randint(1, nmax)
    m = rng.randint(1, mmax)
    return random_instance(rng, g, n, m, interior_frac=interior_frac,
                           constant_hi=constant_hi)


def small_tree_instance(rng: random.Random, vmax: int = 20, nmax: int = 5,
                        mmax: int = 4, constant_hi: float = 0.0):
    g = random_tree(rng, rng.randint(2, vmax))
    n = rng.randint(1, nmax)
    m = rng.randint(1, mmax)
    return random_instance(rng, g, n, m, interior_frac=0.0,
                           constant_hi=constant_hi)
