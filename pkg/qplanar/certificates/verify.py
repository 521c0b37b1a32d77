"""
Exact verification of certificates ``f(Q(G)) x <= r x``.

If the check passes on a connected graph, ``f(q(G)) <= r``. No floating point is used.
"""
import logging

from qplanar.certificates.data import CertificateVerdict
from qplanar.exceptions import CertificateError, GraphPreconditionError

logger = logging.getLogger(__name__)


def multiply_Q(graph, x):  # pylint: disable=invalid-name
    """
    Exact product ``Q(G) x`` for a sequence of Fractions.
    """
    return [graph.degree(u) * x[u] + sum(x[v] for v in graph.adj[u]) for u in range(graph.n)]


def apply_poly(graph, poly, x):
    """
    Exact ``f(Q(G)) x`` by Horner's rule on vectors.
    """
    result = [poly[-1] * item for item in x]
    for coefficient in reversed(poly[:-1]):
        product = multiply_Q(graph, result)
        result = [value + coefficient * item for value, item in zip(product, x)]
    return result


def verify_certificate(graph, certificate):
    """
    Check ``(f(Q) x)_i <= r x_i`` for every vertex ``i``.

    Arguments:
        graph (Graph): a connected graph.
        certificate (Certificate): the vector, target and polynomial to check.

    Returns:
        CertificateVerdict: PASS or FAIL together with the smallest slack ``r x_i - (f(Q) x)_i``.

    Raises:
        CertificateError: If the vector length differs from the order of the graph.
        GraphPreconditionError: If the graph is disconnected, since Q(G) is then reducible.
    """
    if len(certificate.x) != graph.n:
        raise CertificateError(
            lemma_tag=certificate.lemma_tag,
            message=f"vector has {len(certificate.x)} entries for a graph of order {graph.n}",
        )
    if not graph.is_connected():
        raise GraphPreconditionError(operation="verify_certificate", message="graph is disconnected")

    image = apply_poly(graph, certificate.poly, certificate.x)
    slacks = [certificate.r * xi - yi for xi, yi in zip(certificate.x, image)]
    worst_vertex = min(range(graph.n), key=slacks.__getitem__)
    verdict = CertificateVerdict(
        lemma_tag=certificate.lemma_tag,
        passed=slacks[worst_vertex] >= 0,
        r=certificate.r,
        worst_slack=slacks[worst_vertex],
        worst_vertex=worst_vertex,
    )
    logger.debug("certificate %s on n=%d: %s", certificate.lemma_tag, graph.n, verdict.label)
    return verdict
