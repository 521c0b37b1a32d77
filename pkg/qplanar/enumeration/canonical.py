"""
Canonical labeling by colour refinement and individualization.

Two graphs are isomorphic exactly when their canonical forms are equal.
"""
import logging

from qplanar.exceptions import GraphPreconditionError

logger = logging.getLogger(__name__)

MAX_CANONICAL_ORDER = 64


def refine(graph, colors):
    """
    Refine a vertex colouring until it is equitable.

    Each round recolours a vertex by its colour together with the sorted colours of its
    neighbors. New colour indices follow the sorted order of these signatures, so the
    result does not depend on vertex labels.

    Arguments:
        graph (Graph): the graph.
        colors (list of int): initial colour of every vertex.

    Returns:
        list of int: the stable colouring, with colours ``0..c-1``.
    """
    colors = list(colors)
    classes = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in graph.adj[v]))) for v in range(graph.n)
        ]
        palette = {signature: index for index, signature in enumerate(sorted(set(signatures)))}
        colors = [palette[signature] for signature in signatures]
        if len(palette) == classes:
            return colors
        classes = len(palette)


def _encode(graph, colors):
    """
    Edge list of ``graph`` relabeled by a discrete colouring, as bytes.
    """
    edges = sorted(
        (min(colors[u], colors[v]), max(colors[u], colors[v])) for u in range(graph.n) for v in graph.adj[u] if u < v
    )
    return bytes([graph.n] + [label for edge in edges for label in edge])


def _target_cell(colors):
    """
    Smallest non-singleton colour class, ties broken by colour.
    """
    cells = {}
    for v, color in enumerate(colors):
        cells.setdefault(color, []).append(v)
    candidates = [(len(members), color) for color, members in cells.items() if len(members) > 1]
    if not candidates:
        return None
    return cells[min(candidates)[1]]


def _orbits(n, automorphisms, fixed):
    """
    Orbit representative of every vertex under the automorphisms fixing ``fixed`` pointwise.
    """
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for permutation in automorphisms:
        if any(permutation[u] != u for u in fixed):
            continue
        for v, image in enumerate(permutation):
            parent[find(v)] = find(image)
    return [find(v) for v in range(n)]


class _CanonicalSearch:
    """
    Depth-first individualization-refinement search with automorphism pruning.

    Two leaves with equal encodings give an automorphism. A child of a node is skipped
    when it lies in the orbit of an explored sibling under the automorphisms found so far
    that fix the node's individualized vertices, since both subtrees hold the same encodings.
    """

    def __init__(self, graph):
        self.graph = graph
        self.first = None
        self.best = None
        self.automorphisms = []
        self.path = []
        self.explored = []

    def _covered(self, level, v):
        orbits = _orbits(self.graph.n, self.automorphisms, self.path[:level])
        return any(orbits[u] == orbits[v] for u in self.explored[level])

    def _abandon_level(self):
        for level, v in enumerate(self.path):
            if self._covered(level, v):
                return level
        return None

    def _leaf(self, colors):
        encoding = _encode(self.graph, colors)
        if self.first is None:
            self.first = self.best = (encoding, colors)
            return None
        if encoding < self.best[0]:
            self.best = (encoding, colors)
            return None
        for known_encoding, known_colors in (self.first, self.best):
            if encoding == known_encoding:
                vertex_at = {label: v for v, label in enumerate(colors)}
                self.automorphisms.append(tuple(vertex_at[label] for label in known_colors))
                return self._abandon_level()
        return None

    def visit(self, colors):
        """
        Explore the node reached by ``colors``.

        Returns:
            int or None: the level whose current child is covered by an explored sibling
            and can be abandoned, or None.
        """
        colors = refine(self.graph, colors)
        cell = _target_cell(colors)
        if cell is None:
            return self._leaf(colors)
        level = len(self.path)
        self.explored.append([])
        try:
            for v in cell:
                if self._covered(level, v):
                    continue
                self.path.append(v)
                abandon = self.visit([2 * color + (0 if w == v else 1) for w, color in enumerate(colors)])
                self.path.pop()
                self.explored[level].append(v)
                if abandon is not None and abandon < level:
                    return abandon
            return None
        finally:
            self.explored.pop()


def canonical_form(graph):
    """
    Label-invariant byte encoding of ``graph``.

    The degree colouring is refined; while a colour class has several vertices, each
    of them is individualized in turn and the search recurses. The smallest edge-list
    encoding over all leaves is the canonical form. Children in the orbit of an explored
    sibling are skipped, so highly symmetric graphs such as K_n stay polynomial.

    Raises:
        GraphPreconditionError: If the graph has more than 64 vertices.
    """
    if graph.n > MAX_CANONICAL_ORDER:
        raise GraphPreconditionError(
            operation="canonical_form", message=f"n = {graph.n} exceeds {MAX_CANONICAL_ORDER}"
        )
    if graph.n == 0:
        return bytes([0])
    search = _CanonicalSearch(graph)
    search.visit(graph.degrees())
    logger.debug("canonical_form: n=%d automorphisms=%d", graph.n, len(search.automorphisms))
    return search.best[0]


def is_isomorphic(first, second):
    """
    Whether two graphs are isomorphic, compared by canonical form.
    """
    if first.n != second.n or first.m != second.m:
        return False
    if sorted(first.degrees()) != sorted(second.degrees()):
        return False
    return canonical_form(first) == canonical_form(second)
