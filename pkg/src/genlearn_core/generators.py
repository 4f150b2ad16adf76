"""
Synthetic game families.

Every generator is a pure function of its parameters and seed. Graph
structure comes from one networkx / numpy stream; per-node quantities come
from a stream keyed by (seed, node) so they do not depend on the order
nodes are visited in.
"""

from __future__ import annotations

from typing import Callable, List, Optional, Tuple

import networkx as nx
import numpy as np

from src.game_core import InfluenceGame, ValidationError
from src.game_core.validators import validate_probability

from .models import ERDOS_RENYI, PREF_ATTACH, UNIFORM_RANDOM, GenConfig

LogFn = Callable[[str], None]

# Stream tags, so per-node draws never collide with structure draws
_NODE_STREAM = 1
_SIGN_STREAM = 2


def _noop(_: str) -> None:
    return


def _node_rng(seed: int, stream: int, i: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), stream, int(i)])


def _check_n(n: int, minimum: int = 1) -> int:
    if int(n) < minimum:
        raise ValidationError(f"n must be >= {minimum} (got {n}).")
    return int(n)


def gen_erdos_renyi(n: int, edge_p: float, seed: int = 0) -> InfluenceGame:
    """
    Undirected G(n, edge_p) realized as opposing arc pairs.

    Node i draws (b_i, incoming w's) uniformly from the unit sphere: absolute
    Gaussians normalized to unit length, then independent fair signs.
    """
    n = _check_n(n)
    validate_probability("edge_p", edge_p)
    G = nx.gnp_random_graph(n, float(edge_p), seed=int(seed))

    arcs: List[Tuple[int, int, float]] = []
    thresholds = [0.0] * n
    for i in range(n):
        sources = sorted(G.neighbors(i))
        rng = _node_rng(seed, _NODE_STREAM, i)
        v = np.abs(rng.standard_normal(len(sources) + 1))
        v /= np.linalg.norm(v)
        v *= np.where(rng.random(v.size) < 0.5, -1.0, 1.0)
        thresholds[i] = float(v[0])
        arcs.extend((j, i, float(w)) for j, w in zip(sources, v[1:]))
    return InfluenceGame.from_arcs(n, arcs, thresholds)


def gen_uniform_random(n: int, arc_p: float, flip_p: float, seed: int = 0) -> InfluenceGame:
    """
    Each ordered pair gets an arc with probability arc_p, weighted -1 with
    probability flip_p and +1 otherwise. Thresholds are 0.
    """
    n = _check_n(n)
    validate_probability("arc_p", arc_p)
    validate_probability("flip_p", flip_p)
    G = nx.gnp_random_graph(n, float(arc_p), seed=int(seed), directed=True)

    arcs: List[Tuple[int, int, float]] = []
    for i in range(n):
        sources = sorted(G.predecessors(i))
        flips = _node_rng(seed, _SIGN_STREAM, i).random(len(sources)) < float(flip_p)
        arcs.extend((j, i, -1.0 if f else 1.0) for j, f in zip(sources, flips))
    return InfluenceGame.from_arcs(n, arcs, [0.0] * n)


def gen_pref_attach(n: int, m: int = 3, flip_p: float = 0.0, seed: int = 0) -> InfluenceGame:
    """
    Preferential attachment grown from a triangle.

    Each new node links to min(m, current size) distinct earlier nodes,
    sampled without replacement with probability proportional to degree.
    Every link becomes two arcs sharing one +/-1 weight (-1 with probability
    flip_p). Thresholds are 0.
    """
    n = _check_n(n, 3)
    if int(m) < 1:
        raise ValidationError(f"m must be >= 1 (got {m}).")
    validate_probability("flip_p", flip_p)
    rng = np.random.default_rng(int(seed))

    edges: List[Tuple[int, int]] = [(0, 1), (0, 2), (1, 2)]
    degree = np.zeros(n, dtype=float)
    degree[:3] = 2.0
    for v in range(3, n):
        k = min(int(m), v)
        p = degree[:v] / degree[:v].sum()
        targets = sorted(int(u) for u in rng.choice(v, size=k, replace=False, p=p))
        for u in targets:
            edges.append((u, v))
            degree[u] += 1
        degree[v] = k

    flips = rng.random(len(edges)) < float(flip_p)
    arcs: List[Tuple[int, int, float]] = []
    for (u, v), f in zip(edges, flips):
        w = -1.0 if f else 1.0
        arcs.append((u, v, w))
        arcs.append((v, u, w))
    return InfluenceGame.from_arcs(n, arcs, [0.0] * n)


def generate(cfg: GenConfig, *, log_fn: Optional[LogFn] = None) -> InfluenceGame:
    """Dispatch a GenConfig to its generator."""
    log = log_fn or _noop
    if cfg.family == ERDOS_RENYI:
        game = gen_erdos_renyi(cfg.n, cfg.edge_p, cfg.seed)
    elif cfg.family == UNIFORM_RANDOM:
        game = gen_uniform_random(cfg.n, cfg.arc_p, cfg.flip_p, cfg.seed)
    elif cfg.family == PREF_ATTACH:
        game = gen_pref_attach(cfg.n, cfg.m, cfg.flip_p, cfg.seed)
    else:
        raise ValidationError(f"Unknown generator family '{cfg.family}'.")
    log(f"[GEN] {cfg.family} n={game.n} seed={cfg.seed}: {len(game.arcs)} arcs")
    return game

