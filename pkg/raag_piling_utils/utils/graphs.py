# Standard
from itertools import combinations
from typing import Iterable, Sequence
import logging

# Third Party
import networkx as nx

# Local Packages
from raag_piling_utils.utils.pilings import Piling, piling_of_word, support
from raag_piling_utils.utils.words import GroupSpec

logger = logging.getLogger(__name__)


def graph_from_edges(spec: GroupSpec) -> nx.Graph:
    """Defining graph: vertices 1..N, an edge for every non-commuting pair."""
    g = nx.Graph()
    g.add_nodes_from(range(1, spec.n_generators + 1))
    g.add_edges_from(
        pair
        for pair in combinations(range(1, spec.n_generators + 1), 2)
        if pair not in spec.commuting_pairs
    )
    return g


def commuting_pairs_of(g: nx.Graph) -> frozenset[tuple[int, int]]:
    """Complement of the edge set, i.e. the commuting list the graph came from."""
    return frozenset(
        (a, b) for a, b in combinations(sorted(g.nodes), 2) if not g.has_edge(a, b)
    )


def induced_subgraph(g: nx.Graph, vs: Iterable[int]) -> nx.Graph:
    # copy so the fragment does not keep a view onto g
    return g.subgraph(vs).copy()


def connected_components(g: nx.Graph) -> list[frozenset[int]]:
    """Components of g ordered by their least vertex."""
    return sorted((frozenset(c) for c in nx.connected_components(g)), key=min)


def factorise(g: nx.Graph, p: Piling) -> list[frozenset[int]]:
    """Vertex sets of the non-split factors of p."""
    components = connected_components(induced_subgraph(g, support(p)))
    logger.debug(f"factor supports: {[sorted(c) for c in components]}")
    return components


def graphs_to_nsfactors(
    components: Sequence[Iterable[int]], w: Sequence[int], spec: GroupSpec
) -> list[Piling]:
    """Piling of the subword of w on each component, over all N columns."""
    factors = []
    for component in components:
        vertices = frozenset(component)
        factors.append(piling_of_word([k for k in w if abs(k) in vertices], spec))
    return factors
