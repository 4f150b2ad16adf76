from __future__ import annotations

from collections import deque
from typing import FrozenSet, List, Sequence, Set, Tuple

import networkx as nx

from src.game_core import InfluenceGame, ValidationError

from .graphs import undirected_graph
from .models import Separator

Edge = Tuple[int, int]


def _bfs_layers(G: nx.Graph, source: int) -> List[int]:
    """Nodes reachable from source in BFS order, neighbours visited by index."""
    seen = {source}
    out = [source]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in sorted(G.adj[u]):
            if v not in seen:
                seen.add(v)
                out.append(v)
                queue.append(v)
    return out


def _farthest(G: nx.Graph, source: int) -> int:
    dist = nx.single_source_shortest_path_length(G, source)
    top = max(dist.values())
    return min(v for v, d in dist.items() if d == top)


def pseudo_peripheral_node(G: nx.Graph, start: int) -> int:
    return _farthest(G, _farthest(G, start))


def grow_bisection(G: nx.Graph) -> Tuple[Set[int], Set[int]]:
    """Half of a connected graph grown by BFS from a pseudo-peripheral node, refined by Kernighan-Lin."""
    nodes = sorted(G.nodes)
    seed = pseudo_peripheral_node(G, nodes[0])
    half = (len(nodes) + 1) // 2
    a = set(_bfs_layers(G, seed)[:half])
    b = set(nodes) - a
    a, b = nx.community.kernighan_lin_bisection(G, partition=(a, b), weight=None)
    return set(a), set(b)


def cut_edges(G: nx.Graph, a: Set[int]) -> List[Edge]:
    return sorted((min(u, v), max(u, v)) for u, v in G.edges if (u in a) != (v in a))


def _cover(cut: Sequence[Edge], a: Set[int]) -> Set[int]:
    """Minimum vertex cover of the bipartite cut graph: maximum matching, then Konig."""
    if not cut:
        return set()
    H = nx.Graph()
    H.add_edges_from(cut)
    top = {v for v in H.nodes if v in a}
    matching = nx.bipartite.hopcroft_karp_matching(H, top_nodes=top)
    return set(nx.bipartite.to_vertex_cover(H, matching, top_nodes=top))


def _components(G: nx.Graph, nodes: Set[int]) -> Tuple[FrozenSet[int], ...]:
    parts = [frozenset(c) for c in nx.connected_components(G.subgraph(nodes))]
    return tuple(sorted(parts, key=min))


def find_vertex_separator(game: InfluenceGame, parts: int = 2, *, drop: int = 0) -> Separator:
    """
    Vertex separator of the game's undirected graph.

    A disconnected graph (or one with fewer than three nodes) gets S = {} and
    its connected components. Otherwise a bisection's cut edges are turned into
    a vertex cover. With drop > 0 the weakest cut edges (smallest |w_ij| + |w_ji|)
    are left out before covering and reported on the separator.
    """
    if parts != 2:
        raise ValidationError("Separators split into two parts; recurse for more.")
    if drop < 0:
        raise ValidationError(f"drop must be >= 0 (got {drop}).")
    G = undirected_graph(game)
    return separator_of_graph(G, drop=drop)


def separator_of_graph(G: nx.Graph, *, drop: int = 0) -> Separator:
    nodes = set(G.nodes)
    if len(nodes) < 3 or not nx.is_connected(G):
        return Separator(frozenset(), _components(G, nodes))

    a, b = grow_bisection(G)
    cut = cut_edges(G, a)
    dropped: Tuple[Edge, ...] = ()
    if drop:
        ranked = sorted(cut, key=lambda e: (G[e[0]][e[1]].get("strength", 1.0), e))
        dropped = tuple(sorted(ranked[:drop]))
        skip = set(dropped)
        cut = [e for e in cut if e not in skip]
    s = _cover(cut, a)
    comps = tuple(c for c in (frozenset(a - s), frozenset(b - s)) if c)
    return Separator(frozenset(s), comps, dropped)


def is_valid_separator(game: InfluenceGame, sep: Separator) -> bool:
    """S and the components partition the players and no edge joins two components."""
    seen: Set[int] = set(sep.vertex_set)
    for comp in sep.components:
        if seen & comp:
            return False
        seen |= comp
    if seen != set(range(game.n)):
        return False
    owner = {v: k for k, comp in enumerate(sep.components) for v in comp}
    ignored = {tuple(e) for e in sep.dropped}
    for u, v in undirected_graph(game).edges:
        if u in owner and v in owner and owner[u] != owner[v]:
            if (min(u, v), max(u, v)) not in ignored:
                return False
    return True
