"""
Signless Laplacian assembly and power iteration.
"""
import logging

import numpy as np

from qplanar import conf
from qplanar.exceptions import GraphPreconditionError, NonConvergenceError
from qplanar.spectral.data import SpectralResult

logger = logging.getLogger(__name__)


def assemble_Q(graph):  # pylint: disable=invalid-name
    """
    Dense signless Laplacian ``Q(G) = D(G) + A(G)``.

    Arguments:
        graph (Graph): the graph.

    Returns:
        numpy.ndarray: symmetric ``n x n`` float matrix.
    """
    matrix = np.zeros((graph.n, graph.n))
    for u, v in graph.edges():
        matrix[u, v] = matrix[v, u] = 1.0
    matrix[np.diag_indices(graph.n)] = graph.degrees()
    return matrix


def _multiplier(graph, dense_limit=None):
    """
    Build ``x -> Q(G) x``, dense up to ``dense_limit`` (QPLANAR_DENSE_LIMIT) and matrix-free beyond it.
    """
    dense_limit = conf.get_dense_limit() if dense_limit is None else dense_limit
    if graph.n <= dense_limit:
        matrix = assemble_Q(graph)
        return lambda x: matrix @ x

    degrees = np.asarray(graph.degrees(), dtype=float)
    edges = np.asarray(graph.edges(), dtype=np.intp).reshape(-1, 2)
    heads, tails = edges[:, 0], edges[:, 1]

    def multiply(x):
        y = degrees * x
        np.add.at(y, heads, x[tails])
        np.add.at(y, tails, x[heads])
        return y

    return multiply


def q_max(graph, tol=None, max_iter=None, dense_limit=None):
    """
    Compute q(G) and its Perron vector by power iteration.

    Iteration starts from the normalized all-ones vector and stops as soon as
    ``||Q x - q x||_inf <= tol``, where ``q`` is the Rayleigh quotient of the
    current unit iterate ``x``.

    Arguments:
        graph (Graph): the graph. Disconnected graphs are accepted, the result is flagged.
        tol (float): residual tolerance, QPLANAR_TOLERANCE by default.
        max_iter (int): iteration cap, QPLANAR_MAX_ITERATIONS by default.
        dense_limit (int): largest order stored densely, QPLANAR_DENSE_LIMIT by default.

    Returns:
        SpectralResult: the eigenpair estimate.

    Raises:
        NonConvergenceError: If the tolerance is not reached within ``max_iter`` iterations.
          The error carries the iterate with the smallest residual.
    """
    tol = conf.get_tolerance() if tol is None else tol
    max_iter = conf.get_max_iterations() if max_iter is None else max_iter
    if graph.n == 0:
        raise GraphPreconditionError(operation="q_max", message="graph has no vertices")
    connected = graph.is_connected()
    if not connected:
        logger.warning("q_max on a disconnected graph (n=%d, m=%d); Perron positivity not claimed", graph.n, graph.m)

    multiply = _multiplier(graph, dense_limit)
    x = np.full(graph.n, 1.0 / np.sqrt(graph.n))
    best = (np.inf, 0.0, x, 0)
    for iteration in range(1, max_iter + 1):
        y = multiply(x)
        q = float(x @ y)
        residual = float(np.max(np.abs(y - q * x)))
        if residual < best[0]:
            best = (residual, q, x, iteration)
        if residual <= tol:
            logger.debug("q_max converged: n=%d q=%.12g iterations=%d", graph.n, q, iteration)
            return SpectralResult(q=q, perron=x, residual=residual, iterations=iteration, connected=connected)
        x = y / np.linalg.norm(y)
    residual, q, x, iteration = best
    best_result = SpectralResult(q=q, perron=x, residual=residual, iterations=iteration, connected=connected)
    raise NonConvergenceError(iterations=max_iter, residual=residual, best=best_result)


def rayleigh_quotient(graph, y):
    """
    Rayleigh quotient ``y^T Q y / y^T y``, a lower bound for q(G) for any nonzero ``y``.
    """
    y = np.asarray(y, dtype=float)
    denominator = float(y @ y)
    if denominator == 0:
        raise GraphPreconditionError(operation="rayleigh_quotient", message="zero vector")
    return float(y @ _multiplier(graph)(y)) / denominator


def quadratic_form(graph, y):
    """
    ``y^T Q(G) y`` computed edge by edge as ``sum over uv of (y_u + y_v)^2``.
    """
    return float(sum((y[u] + y[v]) ** 2 for u, v in graph.edges()))


def standard_vector(result):
    """
    Rescale the Perron vector of ``result`` so its entries sum to 1.
    """
    return result.perron / result.perron.sum()
