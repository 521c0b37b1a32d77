"""
Isomorph-free generation of plane triangulations by vertex splitting from K4.

Every triangulation on ``n + 1 >= 5`` vertices has an edge whose contraction leaves a
triangulation, so splitting every vertex of every class on ``n`` vertices in every
possible way reaches all classes on ``n + 1``. Duplicates are removed by canonical form.
"""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor

from qplanar import conf
from qplanar.enumeration.canonical import canonical_form
from qplanar.enumeration.data import Census
from qplanar.exceptions import EnumerationError
from qplanar.graphs import Graph, complete
from qplanar.planarity import RotationEmbedding, is_planar

logger = logging.getLogger(__name__)

MIN_ORDER = 4
MAX_ORDER = 12
MAX_BRUTE_FORCE_ORDER = 7

# Number of plane triangulations up to isomorphism, by order.
KNOWN_CENSUS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50, 10: 233, 11: 1249, 12: 7595}


def _insert_beside(order, v, new, toward):
    """
    Insert ``new`` next to ``v`` in a rotation, on the side of ``toward``.
    """
    position = order.index(v)
    if order[(position + 1) % len(order)] == toward:
        order.insert(position + 1, new)
    else:
        order.insert(position, new)


def split_vertex(embedding, v, i, j):
    """
    Split ``v`` into ``v`` and a new vertex ``n`` joined by an edge.

    With ``w_0 .. w_{d-1}`` the rotation of ``v``, the new vertex takes ``w_i .. w_j``
    and ``v`` keeps ``w_j .. w_i``; ``w_i`` and ``w_j`` stay adjacent to both.

    Arguments:
        embedding (RotationEmbedding): a plane triangulation.
        v (int): vertex to split.
        i (int), j (int): rotation positions with ``0 <= i < j < d(v)``.

    Returns:
        RotationEmbedding: the triangulation on ``n + 1`` vertices.
    """
    rotation = [list(order) for order in embedding.rotation]
    around = embedding.rotation[v]
    degree = len(around)
    new = len(rotation)
    rotation.append([around[t] for t in range(i, j + 1)] + [v])
    rotation[v] = [around[(j + t) % degree] for t in range(degree - (j - i) + 1)] + [new]
    for t in range(i + 1, j):
        order = rotation[around[t]]
        order[order.index(v)] = new
    _insert_beside(rotation[around[i]], v, new, toward=around[i + 1])
    _insert_beside(rotation[around[j]], v, new, toward=around[j - 1])
    return RotationEmbedding(rotation=rotation)


def expansions(embedding):
    """
    All vertex splits of a triangulation.
    """
    for v, around in enumerate(embedding.rotation):
        for i, j in itertools.combinations(range(len(around)), 2):
            yield split_vertex(embedding, v, i, j)


def _keep(classes, key, embedding):
    """
    Record ``embedding`` for its class unless a smaller rotation is already kept.
    """
    if key not in classes or embedding.rotation < classes[key].rotation:
        classes[key] = embedding


def _expand_classes(parents):
    """
    Canonical forms of the children of ``parents``, each with one embedding.
    """
    children = {}
    for parent in parents:
        for child in expansions(parent):
            _keep(children, canonical_form(child.graph()), child)
    return children


def _check_order(n, low, high):
    if not low <= n <= high:
        raise EnumerationError(message=f"n = {n} outside the supported range {low}..{high}")


def _chunks(items, count):
    return [items[index::count] for index in range(count)]


def generate_embeddings(n, jobs=None):
    """
    One embedded triangulation per isomorphism class on ``n`` vertices.

    Each level is expanded from the previous one. With ``jobs > 1`` the parents of a
    level are split between worker processes and the canonical-form maps are merged.
    Every class keeps its smallest rotation, so the result does not depend on ``jobs``.

    Arguments:
        n (int): order, 4 <= n <= 12.
        jobs (int): worker processes; QPLANAR_JOBS when None.

    Returns:
        list of RotationEmbedding: sorted by canonical form.

    Raises:
        EnumerationError: If n is out of range.
    """
    _check_order(n, MIN_ORDER, MAX_ORDER)
    jobs = jobs or conf.get_jobs()
    level = {canonical_form(complete(MIN_ORDER)): is_planar(complete(MIN_ORDER))}
    for order in range(MIN_ORDER + 1, n + 1):
        parents = [level[key] for key in sorted(level)]
        if jobs > 1 and len(parents) > 1:
            level = {}
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                for children in executor.map(_expand_classes, _chunks(parents, jobs)):
                    for key, child in children.items():
                        _keep(level, key, child)
        else:
            level = _expand_classes(parents)
        logger.info("generated %d triangulations on %d vertices", len(level), order)
    return [level[key] for key in sorted(level)]


def gen_triangulations(n, jobs=None):
    """
    Yield every maximal planar graph on ``n`` vertices once up to isomorphism.

    Raises:
        EnumerationError: If n is outside 4..12.
    """
    for embedding in generate_embeddings(n, jobs=jobs):
        yield embedding.graph()


def brute_force_classes(n):
    """
    Isomorphism classes of maximal planar graphs found by testing every edge set.

    Every labeled graph with ``3n - 6`` edges and minimum degree 3 is tested for
    planarity and bucketed by canonical form. Only practical for ``n <= 7``.

    Returns:
        list of Graph: one representative per class, sorted by canonical form.

    Raises:
        EnumerationError: If n is outside 4..7.
    """
    _check_order(n, MIN_ORDER, MAX_BRUTE_FORCE_ORDER)
    pairs = list(itertools.combinations(range(n), 2))
    classes = {}
    for edges in itertools.combinations(pairs, 3 * n - 6):
        degrees = [0] * n
        for u, v in edges:
            degrees[u] += 1
            degrees[v] += 1
        if min(degrees) < 3:
            continue
        graph = Graph.from_edges(n, edges)
        if is_planar(graph) is not None:
            classes.setdefault(canonical_form(graph), graph)
    logger.info("brute force found %d classes on %d vertices", len(classes), n)
    return [classes[key] for key in sorted(classes)]


def census(n, jobs=None):
    """
    Generate the classes on ``n`` vertices and compare their number with KNOWN_CENSUS.

    Returns:
        Census: the count, the expected count and the graphs. A mismatch is logged, not raised.
    """
    graphs = list(gen_triangulations(n, jobs=jobs))
    result = Census(n=n, count=len(graphs), expected=KNOWN_CENSUS.get(n), graphs=graphs)
    if not result.matches:
        logger.error("generated %d classes on %d vertices, expected %d", result.count, n, result.expected)
    return result
