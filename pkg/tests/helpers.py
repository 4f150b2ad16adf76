from __future__ import annotations

from typing import Optional

import numpy as np

from src.game_core import InfluenceGame


def coordination_pair() -> InfluenceGame:
    return InfluenceGame.from_arcs(2, [(0, 1, 1.0), (1, 0, 1.0)], [0.0, 0.0])


def anti_coordination_pair() -> InfluenceGame:
    return InfluenceGame.from_arcs(2, [(0, 1, -1.0), (1, 0, -1.0)], [0.0, 0.0])


def clique(n: int, w: float = 1.0, b: float = 0.0) -> InfluenceGame:
    arcs = [(j, i, w) for j in range(n) for i in range(n) if i != j]
    return InfluenceGame.from_arcs(n, arcs, [b] * n)


def random_game(
    rng: np.random.Generator,
    n: int,
    density: float = 0.5,
    *,
    integer: bool = False,
    nonnegative: bool = False,
    symmetric: bool = False,
    thresholds: Optional[float] = None,
) -> InfluenceGame:
    """Random mixed-sign game used as solver fodder."""
    W = np.zeros((n, n))
    for j in range(n):
        for i in range(n):
            if i == j or (symmetric and i < j):
                continue
            if rng.random() < density:
                w = float(rng.integers(-3, 4)) if integer else float(rng.normal())
                if nonnegative:
                    w = abs(w)
                W[j, i] = w
                if symmetric:
                    W[i, j] = w
    if thresholds is None:
        b = rng.integers(-2, 3, size=n).astype(float) if integer else rng.normal(scale=0.5, size=n)
    else:
        b = np.full(n, thresholds)
    return InfluenceGame.from_matrix(W, b)


def random_forest(rng: np.random.Generator, n: int, *, keep_edge: float = 0.9) -> InfluenceGame:
    """Random forest with independent, possibly asymmetric, weights in both directions."""
    arcs = []
    for v in range(1, n):
        if rng.random() > keep_edge:
            continue
        u = int(rng.integers(0, v))
        for j, i in ((u, v), (v, u)):
            if rng.random() < 0.85:
                arcs.append((j, i, float(rng.normal())))
    b = rng.normal(scale=0.7, size=n)
    return InfluenceGame.from_arcs(n, arcs, b)


def separable_game(rng: np.random.Generator, sizes=(8, 8), bridges: int = 1, density: float = 0.4) -> InfluenceGame:
    """Dense random blocks joined by a few bridge edges (arcs in both directions)."""
    n = sum(sizes)
    arcs = []
    start = 0
    blocks = []
    for size in sizes:
        block = list(range(start, start + size))
        blocks.append(block)
        for j in block:
            for i in block:
                if i != j and rng.random() < density:
                    arcs.append((j, i, float(rng.normal())))
        start += size
    for _ in range(bridges):
        a, c = rng.choice(len(blocks), size=2, replace=False)
        u, v = int(rng.choice(blocks[a])), int(rng.choice(blocks[c]))
        if not any((j, i) == (u, v) for j, i, _ in arcs):
            arcs.append((u, v, float(rng.normal())))
            arcs.append((v, u, float(rng.normal())))
    return InfluenceGame.from_arcs(n, arcs, rng.normal(scale=0.5, size=n))


def two_triangles(w: float = 1.0, b: float = 0.0) -> InfluenceGame:
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
    arcs = [(u, v, w) for u, v in edges] + [(v, u, w) for u, v in edges]
    return InfluenceGame.from_arcs(6, arcs, [b] * 6)
