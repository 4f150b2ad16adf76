from __future__ import annotations

import networkx as nx

from src.game_core import InfluenceGame


def undirected_graph(game: InfluenceGame) -> nx.Graph:
    """Union of arc directions; edge attribute `strength` = |w_ij| + |w_ji|."""
    G = nx.Graph()
    G.add_nodes_from(range(game.n))
    for j, i, w in game.arcs:
        if G.has_edge(j, i):
            G[j][i]["strength"] += abs(w)
        else:
            G.add_edge(j, i, strength=abs(w))
    return G


def is_forest_game(game: InfluenceGame) -> bool:
    return nx.is_forest(undirected_graph(game))
