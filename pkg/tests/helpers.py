"""Shared oracles and golden tables for the test suite.

The brute-force routines here are deliberately independent of the library's
implementations: they recompute the same quantities by definition-level
enumeration so the fast code paths have something honest to be checked
against.
"""

from functools import lru_cache

from dyckstats import (
    DOWN,
    UP,
    DyckPath,
    PlantedTree,
    edges_at_residue,
    enumerate_dyck,
    path_to_tree,
)

# Distribution of up steps at height h = c (mod 3) over paths of semilength n,
# for c = 0, 1, 2; keys are n -> {k: count}.
MOD3_TABLES = {
    0: {
        1: {0: 1},
        2: {0: 2},
        3: {0: 4, 1: 1},
        4: {0: 8, 1: 5, 2: 1},
        5: {0: 16, 1: 18, 2: 7, 3: 1},
        6: {0: 32, 1: 56, 2: 34, 3: 9, 4: 1},
    },
    1: {
        1: {1: 1},
        2: {1: 1, 2: 1},
        3: {1: 2, 2: 2, 3: 1},
        4: {1: 4, 2: 6, 3: 3, 4: 1},
        5: {1: 8, 2: 17, 3: 12, 4: 4, 5: 1},
        6: {1: 16, 2: 46, 3: 44, 4: 20, 5: 5, 6: 1},
    },
    2: {
        1: {0: 1},
        2: {0: 1, 1: 1},
        3: {0: 1, 1: 3, 2: 1},
        4: {0: 1, 1: 7, 2: 5, 3: 1},
        5: {0: 1, 1: 15, 2: 18, 3: 7, 4: 1},
        6: {0: 1, 1: 31, 2: 56, 3: 34, 4: 9, 5: 1},
    },
}


@lru_cache(maxsize=None)
def all_dyck(n: int) -> tuple[DyckPath, ...]:
    return tuple(enumerate_dyck(n))


@lru_cache(maxsize=None)
def planted_trees(n: int) -> tuple[PlantedTree, ...]:
    """All planted trees with n >= 1 edges (hang each smaller tree on a stalk)."""
    return tuple(
        PlantedTree.from_shape((path_to_tree(p).shape,)) for p in all_dyck(n - 1)
    )


def brute_maximal_pyramids(steps, s: int = 1) -> list[tuple[int, int]]:
    """All (start, height) of maximal U^(s*h) D^h factors, by definition:
    scan every position and height, then drop factors contained in taller ones."""
    total = len(steps)
    found = []
    for start in range(total):
        h = 1
        while start + (s + 1) * h <= total:
            ups = all(steps[start + i] is UP for i in range(s * h))
            downs = all(steps[start + s * h + i] is DOWN for i in range(h))
            if ups and downs:
                found.append((start, h))
            h += 1
    maximal = []
    for a, h in found:
        contained = any(
            h2 > h and a2 <= a and a + (s + 1) * h <= a2 + (s + 1) * h2
            for a2, h2 in found
        )
        if not contained:
            maximal.append((a, h))
    return sorted(maximal)


def red_count(tree) -> int:
    """Edges at level divisible by 3."""
    return edges_at_residue(tree, 3, {0})


def height_bounded_count(n: int, h: int) -> int:
    return sum(1 for p in all_dyck(n) if p.height() <= h)
