"""
Maximal planar test instances whose degree census satisfies a chosen construction.

Every fixture is checked after it is built: the contract is the census, never a
particular graph, and a non-conforming result raises instead of being returned.
"""
import logging
import math

from qplanar.certificates.classify import band_thresholds, classify
from qplanar.certificates.lemmas import BAND_N1, BAND_N2, SECOND_HUB_N1, SECOND_HUB_N2, SPARSE_N1, SPARSE_N2
from qplanar.exceptions import GraphConstructionError, QPlanarException
from qplanar.graphs import Graph
from qplanar.planarity import is_maximal_planar

logger = logging.getLogger(__name__)

REGIMES = ("n-1", "n-2")


def zigzag_order(polygon):
    """
    Visit a polygon alternately from both ends: ``p0, p1, p[-1], p2, p[-2], ...``.
    """
    order = [polygon[0]]
    low, high = 1, len(polygon) - 1
    take_low = True
    while low <= high:
        if take_low:
            order.append(polygon[low])
            low += 1
        else:
            order.append(polygon[high])
            high -= 1
        take_low = not take_low
    return order


def zigzag_chords(polygon):
    """
    Chords of the strip triangulation of a polygon; every vertex gets at most two.
    """
    order = zigzag_order(polygon)
    return [(order[i], order[i + 1]) for i in range(1, len(order) - 2)]


def zigzag_faces(polygon):
    """
    Triangles of the strip triangulation, in the order they are laid.
    """
    order = zigzag_order(polygon)
    return [tuple(order[i:i + 3]) for i in range(len(order) - 2)]


def _hub_over_rim(rim_size):
    """
    Edges of a hub (vertex 0) joined to every vertex of the cycle 1..rim_size.
    """
    rim = list(range(1, rim_size + 1))
    edges = [(0, v) for v in rim]
    edges.extend((rim[i], rim[(i + 1) % rim_size]) for i in range(rim_size))
    return rim, edges


def _sink(edges, vertex, face):
    edges.extend((vertex, corner) for corner in face)


def _near_wheel(n):
    """
    Hub adjacent to all but one vertex; the missed vertex sits in an outer face.
    """
    rim, edges = _hub_over_rim(n - 2)
    edges.extend(zigzag_chords(rim))
    _sink(edges, n - 1, zigzag_faces(rim)[0])
    return Graph.from_edges(n, edges)


def _wheel(n):
    """
    Hub adjacent to every vertex of a strip-triangulated rim.
    """
    rim, edges = _hub_over_rim(n - 1)
    edges.extend(zigzag_chords(rim))
    return Graph.from_edges(n, edges)


def _two_hub(n, gap, regime):
    """
    Hub over a rim plus a second hub ``rim[0]`` fanning over the rim except ``gap`` consecutive vertices.

    In regime ``"n-2"`` the last vertex is sunk into a face of the gap pocket, away from both hubs.
    """
    rim_size = n - 1 if regime == "n-1" else n - 2
    if gap < 1 or gap > rim_size - 3:
        raise GraphConstructionError(kind="two_hub", message=f"gap must be between 1 and {rim_size - 3}, got {gap}")
    rim, edges = _hub_over_rim(rim_size)
    second = rim[0]
    start = max(1, (rim_size - gap) // 2)
    missed = set(rim[start + 1:start + 1 + gap])
    edges.extend((second, v) for v in rim[2:-1] if v not in missed)
    pocket = [second] + rim[start:start + gap + 2]
    edges.extend(zigzag_chords(pocket))
    if regime == "n-2":
        _sink(edges, n - 1, zigzag_faces(pocket)[1])
    return Graph.from_edges(n, edges)


def _mid_band(n, k, regime, block=None):
    """
    Hub over a rim plus ``k`` rim vertices, each fanning over the next ``block`` rim vertices.

    The block defaults to the smallest size putting the fanning vertices in the middle
    band of the regime. In regime ``"n-2"`` the last vertex is sunk into the first fan.
    """
    rim_size = n - 1 if regime == "n-1" else n - 2
    if block is None:
        block = math.ceil(band_thresholds(n, regime)[0])
    if k < 1 or block < 2 or k * (block + 1) > rim_size or 2 * k + rim_size - k * (block + 1) < 3:
        raise GraphConstructionError(
            kind="mid_band", message=f"{k} fans of {block} vertices do not fit a rim of {rim_size}"
        )
    rim, edges = _hub_over_rim(rim_size)
    outer = []
    for j in range(k):
        position = j * (block + 1)
        fan_center = rim[position]
        edges.extend((fan_center, rim[position + i]) for i in range(2, block + 1))
        outer.extend((fan_center, rim[position + block]))
    outer.extend(rim[k * (block + 1):])
    edges.extend(zigzag_chords(outer))
    if regime == "n-2":
        _sink(edges, n - 1, (rim[0], rim[1], rim[2]))
    return Graph.from_edges(n, edges)


def _tower(n):
    """
    Stack of triangles joined by antiprism bands; one or two extra vertices cap the end faces.
    """
    layers, extra = divmod(n, 3)
    if layers < 2:
        raise GraphConstructionError(kind="tower", message=f"needs n >= 6, got {n}")
    edges = []
    for layer in range(layers):
        a = [3 * layer + j for j in range(3)]
        edges.extend((a[j], a[(j + 1) % 3]) for j in range(3))
        if layer + 1 < layers:
            b = [3 * (layer + 1) + j for j in range(3)]
            edges.extend((a[j], b[j]) for j in range(3))
            edges.extend((a[j], b[(j + 1) % 3]) for j in range(3))
    caps = [(0, 1, 2), tuple(3 * (layers - 1) + j for j in range(3))]
    for i in range(extra):
        _sink(edges, 3 * layers + i, caps[i])
    return Graph.from_edges(n, edges)


def _target(kind, regime):
    """
    Construction whose hypotheses the fixture must satisfy, None for the Δ <= n-3 tower.
    """
    return {
        ("near_wheel", "n-2"): SPARSE_N2,
        ("wheel", "n-1"): SPARSE_N1,
        ("two_hub", "n-1"): SECOND_HUB_N1,
        ("two_hub", "n-2"): SECOND_HUB_N2,
        ("mid_band", "n-1"): BAND_N1,
        ("mid_band", "n-2"): BAND_N2,
        ("tower", None): None,
    }[(kind, regime)]


FIXTURE_KINDS = ("near_wheel", "wheel", "two_hub", "mid_band", "tower")


def build_fixture(kind, n, gap=None, k=None, regime=None, block=None):
    """
    Build a maximal planar graph meeting the degree census of a construction.

    Arguments:
        kind (str): ``near_wheel`` (Δ = n-2, all others small), ``wheel`` (Δ = n-1, all others
          small), ``two_hub`` (second hub missing ``gap`` rim vertices), ``mid_band`` (``k``
          middle-band vertices) or ``tower`` (Δ <= n-3).
        n (int): order.
        gap (int): ``two_hub`` only.
        k (int): ``mid_band`` only.
        regime (str): ``"n-1"`` or ``"n-2"`` for ``two_hub`` and ``mid_band``; defaults to ``"n-1"``.
        block (int): ``mid_band`` only, overrides the fan size.

    Raises:
        GraphConstructionError: If the kind is unknown, the parameters do not fit, or the
          result misses the census of its target construction.
    """
    if kind not in FIXTURE_KINDS:
        raise GraphConstructionError(kind=kind, message=f"unknown fixture; known: {FIXTURE_KINDS}")
    if n < 6:
        raise GraphConstructionError(kind=kind, message=f"fixtures need n >= 6, got {n}")
    if kind in ("two_hub", "mid_band"):
        regime = regime or "n-1"
        if regime not in REGIMES:
            raise GraphConstructionError(kind=kind, message=f"unknown regime {regime!r}")
    else:
        regime = {"near_wheel": "n-2", "wheel": "n-1", "tower": None}[kind]

    if kind == "near_wheel":
        graph = _near_wheel(n)
    elif kind == "wheel":
        graph = _wheel(n)
    elif kind == "two_hub":
        if gap is None:
            raise GraphConstructionError(kind=kind, message="missing gap")
        graph = _two_hub(n, gap, regime)
    elif kind == "mid_band":
        if k is None:
            raise GraphConstructionError(kind=kind, message="missing k")
        graph = _mid_band(n, k, regime, block)
    else:
        graph = _tower(n)

    _validate(kind, graph, _target(kind, regime), regime)
    return graph


def _validate(kind, graph, target, regime):
    """
    Check the fixture is maximal planar and meets the census of its target.
    """
    if not is_maximal_planar(graph):
        raise GraphConstructionError(kind=kind, message="construction is not maximal planar")
    if target is None:
        delta = max(graph.degrees())
        if delta > graph.n - 3:
            raise GraphConstructionError(kind=kind, message=f"census failed: Δ = {delta} > n - 3")
        return
    try:
        structure = classify(graph, regime)
    except QPlanarException as exc:
        raise GraphConstructionError(kind=kind, message=f"census failed: {exc}") from exc
    unmet = target.unmet_hypotheses(structure)
    if unmet:
        raise GraphConstructionError(
            kind=kind, message=f"census failed for {target.lemma_tag}: " + "; ".join(unmet)
        )
    logger.debug("fixture %s(n=%d) meets the census of %s", kind, graph.n, target.lemma_tag)
