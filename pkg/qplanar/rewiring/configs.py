"""
Builders for the four near-extremal configurations and their swaps.

Every configuration has a hub v1 adjacent to all of ``v2 .. vn``, the link cycle
``v2 v3 ... vn v2`` of v1, and a second hub v2 adjacent to every cycle vertex except
the missed ones. The chords left around the missed vertices are forced by maximality,
except for the two-vertex gap of ``wide``, whose mirror image is matched by reversing
the cycle. Labels ``v1..vn`` are vertices ``0..n-1`` of a built instance.
"""
from qplanar.exceptions import GraphConstructionError
from qplanar.graphs import Graph
from qplanar.planarity import is_maximal_planar
from qplanar.rewiring.data import CONFIGS, SwapPlan

MIN_CONFIG_ORDER = 8


def missed_vertices(config, k, l=None):  # noqa: E741
    """
    Cycle vertices the second hub is not adjacent to.
    """
    return {
        "single": (k,),
        "wide": (k, k + 1),
        "near": (k - 1, k + 1),
        "apart": (k, l),
    }[config]


def chords(config, k, l=None):  # noqa: E741
    """
    Edges among the cycle vertices that close the faces around the missed vertices.
    """
    return {
        "single": [(k - 1, k + 1)],
        "wide": [(k - 1, k + 2), (k, k + 2)],
        "near": [(k - 2, k), (k, k + 2)],
        "apart": [(k - 1, k + 1), (l - 1, l + 1)],
    }[config]


def swap_labels(config, k, l=None):  # noqa: E741
    """
    ``(remove, add)`` of the swap, as label indices.
    """
    return {
        "single": ((k - 1, k + 1), (2, k)),
        "wide": ((k - 1, k + 2), (2, k)),
        "near": ((k, k + 2), (2, k + 1)),
        "apart": ((l - 1, l + 1), (2, l)),
    }[config]


def check_parameters(config, n, k, l=None):  # noqa: E741
    """
    Validate ``k`` (and ``l``) against the range of a configuration.

    Raises:
        GraphConstructionError: If the configuration is unknown or a parameter is out of range.
    """
    if config not in CONFIGS:
        raise GraphConstructionError(kind=config, message=f"unknown configuration; known: {CONFIGS}")
    if n < MIN_CONFIG_ORDER:
        raise GraphConstructionError(kind=config, message=f"needs n >= {MIN_CONFIG_ORDER}, got {n}")
    valid = {
        "single": 4 <= k <= n - 1,
        "wide": 4 <= k <= n - 2,
        "near": 5 <= k <= n - 2,
        "apart": l is not None and 4 <= k <= l - 2 and l <= n - 1,
    }[config]
    if not valid:
        raise GraphConstructionError(kind=config, message=f"k = {k}, l = {l} out of range for n = {n}")


def config_edges(config, n, k, l=None):  # noqa: E741
    """
    Edge list of a configuration on labels ``1..n``.
    """
    missed = set(missed_vertices(config, k, l))
    edges = [(1, i) for i in range(2, n + 1)]
    edges.extend((i, i + 1) for i in range(2, n))
    edges.append((n, 2))
    edges.extend((2, i) for i in range(4, n) if i not in missed)
    edges.extend(chords(config, k, l))
    return edges


def build_config(config, n, k, l=None):  # noqa: E741
    """
    Build a configuration with v_i as vertex ``i - 1``.

    Arguments:
        config (str): ``single``, ``wide``, ``near`` or ``apart``.
        n (int): order.
        k (int): first missed vertex; for ``near`` the vertex between the two missed ones.
        l (int): second missed vertex, ``apart`` only.

    Raises:
        GraphConstructionError: If a parameter is out of range.
    """
    check_parameters(config, n, k, l)
    graph = Graph.from_edges(n, ((u - 1, v - 1) for u, v in config_edges(config, n, k, l)))
    if not is_maximal_planar(graph):
        raise GraphConstructionError(kind=config, message="construction is not maximal planar")
    return graph


def plan_for(config, n, k, l=None, labels=None):  # noqa: E741
    """
    The swap of a configuration, with ``labels`` mapping label indices to vertices.

    Without ``labels`` the identity labeling of build_config is assumed.
    """
    (remove_a, remove_b), (add_a, add_b) = swap_labels(config, k, l)
    labels = tuple(labels) if labels is not None else tuple(range(n))

    def vertex(index):
        return labels[index - 1]

    return SwapPlan(
        config=config,
        remove=(vertex(remove_a), vertex(remove_b)),
        add=(vertex(add_a), vertex(add_b)),
        k=k,
        l=l,
        labels=labels,
    )
