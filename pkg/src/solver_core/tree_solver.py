"""
Exact PSNE search on games whose underlying undirected graph is a forest.

Each component is rooted at its lowest-index node. The downstream pass
runs from the leaves up and builds, for every node i with tree parent c,
the 2x2 table T_ic(x_i, x_c): can i best-respond at x_i given x_c when
every subtree child k plays an action its own table allows? Children
whose allowed set is empty veto x_i, children with one allowed action
are pinned to it, and children with both allowed actions are set to
whichever sign helps x_i. The chosen child actions are stored as the
witness for (i, x_i) and replayed top-down in the upstream pass.

Runs in O(n d) with d the maximum degree.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, List, Optional

import networkx as nx

from src.game_core import InfluenceGame, JointAction, LigError, NotApplicableError, is_psne

from .graphs import undirected_graph

_ACTIONS = (-1, 1)


def _idx(a: int) -> int:
    return 0 if a < 0 else 1


def _sigma(v: float) -> int:
    return 1 if v > 0 else -1


def solve_tree(game: InfluenceGame) -> Optional[JointAction]:
    """One PSNE of a forest game, or None when the game has none."""
    G = undirected_graph(game)
    if not nx.is_forest(G):
        raise NotApplicableError("The tree method needs a game whose underlying graph is a forest.")

    n = game.n
    eps = game.tie_epsilon
    parent = [-1] * n
    children: List[List[int]] = [[] for _ in range(n)]
    order: List[int] = []
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in sorted(G.adj[u]):
                if not seen[v]:
                    seen[v] = True
                    parent[v] = u
                    children[u].append(v)
                    queue.append(v)

    # table[i][idx(x_i)][idx(x_parent)]; roots use column 0 only
    table: List[List[List[bool]]] = [[[False, False], [False, False]] for _ in range(n)]
    witness: List[List[Optional[Dict[int, int]]]] = [[None, None] for _ in range(n)]

    for i in reversed(order):
        c = parent[i]
        for xi in _ACTIONS:
            chosen: Optional[Dict[int, int]] = {}
            for k in children[i]:
                allowed = [xk for xk in _ACTIONS if table[k][_idx(xk)][_idx(xi)]]
                if not allowed:
                    chosen = None
                    break
                if len(allowed) == 1:
                    chosen[k] = allowed[0]
                else:
                    chosen[k] = _sigma(xi * game.weight(k, i))
            witness[i][_idx(xi)] = chosen
            if chosen is None:
                continue
            for xc in (_ACTIONS if c >= 0 else (-1,)):
                f = 0.0
                for j, w in game.in_arcs(i):
                    f += w * (xc if j == c else chosen[j])
                f -= game.thresholds[i]
                table[i][_idx(xi)][_idx(xc)] = xi * f >= -eps

    x = [0] * n
    for i in order:
        if parent[i] < 0:
            feasible = [xi for xi in _ACTIONS if table[i][_idx(xi)][0]]
            if not feasible:
                return None
            x[i] = feasible[0]
        chosen = witness[i][_idx(x[i])]
        if chosen is None:
            raise LigError(f"Tree pass reached player {i} with no witness for action {x[i]}.")
        for k, xk in chosen.items():
            x[k] = xk

    result = tuple(x)
    if not is_psne(game, result):
        raise LigError("Tree pass produced a joint action that is not a PSNE.")
    return result
