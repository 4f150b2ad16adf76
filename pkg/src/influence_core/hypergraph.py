"""
Game hypergraphs and their hitting-set form.

Selecting players S (each prescribed its goal action) leaves the goal as the
only consistent PSNE exactly when every other hyperedge disagrees with the
goal somewhere in S. Writing that disagreement set as a set of goal nodes
turns the unique-hyperedge problem into minimum hitting set, and the
construction runs both ways.
"""

from __future__ import annotations

from typing import Collection, FrozenSet, Iterable, List, Sequence

from src.game_core import JointAction, ValidationError

from .models import GameHypergraph, HittingSetInstance, Node


def build_hypergraph(psne: Sequence[JointAction], goal: Sequence[int]) -> GameHypergraph:
    if not psne:
        raise ValidationError("A game hypergraph needs at least one PSNE.")
    return GameHypergraph.from_psne(psne, goal)


def hitting_set_instance(hg: GameHypergraph) -> HittingSetInstance:
    """
    Ground set = the goal hyperedge; sets to hit = the goal hyperedge itself
    plus, for every other hyperedge e, the goal nodes e does not contain.
    """
    goal_edge = hg.goal_nodes()
    edges: List[FrozenSet[Node]] = [goal_edge]
    for k, e in enumerate(hg.hyperedges):
        if k == hg.goal_index:
            continue
        edges.append(goal_edge - frozenset(enumerate(e)))
    return HittingSetInstance(goal_edge, tuple(edges))


def complement_edges(instance: HittingSetInstance) -> List[FrozenSet[Node]]:
    return [e for e in instance.edges if e != instance.universe]


def is_hitting_set(instance: HittingSetInstance, chosen: Collection[Node]) -> bool:
    picked = frozenset(chosen)
    if not picked <= instance.universe:
        raise ValidationError("Chosen nodes must come from the instance's ground set.")
    return all(edge & picked for edge in instance.edges)


def players_to_nodes(hg: GameHypergraph, players: Iterable[int]) -> FrozenSet[Node]:
    return hg.goal_nodes(players)


def hypergraph_from_hitting_set(num_elements: int, sets: Iterable[Collection[int]]) -> GameHypergraph:
    """
    Game hypergraph whose unique-hyperedge problem is the given hitting set.

    Element i becomes player i, the goal is all +1 and each set A becomes
    the hyperedge playing -1 exactly on A. Hitting sets of the family
    (nonempty selections) are exactly the feasible selections.
    """
    if num_elements < 1:
        raise ValidationError("A hitting-set instance needs at least one element.")
    goal = (1,) * num_elements
    edges: List[JointAction] = [goal]
    seen = {goal}
    for k, members in enumerate(sets):
        chosen = set(int(i) for i in members)
        if not chosen:
            raise ValidationError(f"Set {k} is empty and can never be hit.")
        if any(not (0 <= i < num_elements) for i in chosen):
            raise ValidationError(f"Set {k} has an element outside 0..{num_elements - 1}.")
        e = tuple(-1 if i in chosen else 1 for i in range(num_elements))
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return GameHypergraph(num_elements, tuple(edges), 0)


def consistent_edges(hg: GameHypergraph, players: Iterable[int]) -> List[JointAction]:
    """Hyperedges agreeing with the goal on every selected player."""
    x = hg.goal
    chosen = list(players)
    return [e for e in hg.hyperedges if all(e[i] == x[i] for i in chosen)]
