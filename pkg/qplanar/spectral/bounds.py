"""
Closed-form bounds on q(G) and the eigenvector identities of K2 join P(n-2).
"""
import logging
from fractions import Fraction

import numpy as np

from qplanar.exceptions import GraphPreconditionError
from qplanar.graphs import build_H
from qplanar.planarity import is_maximal_planar
from qplanar.spectral.data import BoundReport, IdentityCheck, PlanarBound
from qplanar.spectral.solver import q_max, standard_vector

logger = logging.getLogger(__name__)


def merris_bound(graph):
    """
    Upper bound ``max over u of d(u) + (sum of d(v) over v ~ u) / d(u)``.

    Raises:
        GraphPreconditionError: If the graph has an isolated vertex.
    """
    degrees = graph.degrees()
    if not degrees or min(degrees) == 0:
        raise GraphPreconditionError(operation="merris_bound", message="graph has an isolated vertex")
    return float(max(
        degrees[u] + Fraction(sum(degrees[v] for v in graph.adj[u]), degrees[u]) for u in range(graph.n)
    ))


def lower_bound_delta(graph):
    """
    Lower bound ``Δ + 1``, attained exactly by stars.

    Raises:
        GraphPreconditionError: If the graph is disconnected or has no edge.
    """
    if graph.m == 0 or not graph.is_connected():
        raise GraphPreconditionError(operation="lower_bound_delta", message="graph must be connected with an edge")
    return max(graph.degrees()) + 1


def _case_of(n, delta):
    """
    Case tag and closed-form bound of the planar degree bound for maximum degree ``delta``.
    """
    if delta == n - 1:
        return "i", n + 4 - Fraction(6, n - 1)
    if delta == n - 2:
        return "ii", n + 3 - Fraction(3, n - 2)
    return "iii", Fraction(n + 2)


def planar_degree_bound(graph):
    """
    Degree bounds for a maximal planar graph on ``n >= 6`` vertices.

    Returns:
        PlanarBound: the per-vertex maximum of ``d + 2 + (3n - 9) / d``, its envelope over
          the degree range and the closed form of the case selected by Δ.

    Raises:
        GraphPreconditionError: If the graph is not maximal planar or has fewer than 6 vertices.
    """
    if graph.n < 6 or not is_maximal_planar(graph):
        raise GraphPreconditionError(
            operation="planar_degree_bound", message="graph must be maximal planar with n >= 6"
        )
    n = graph.n
    degrees = graph.degrees()
    delta = max(degrees)

    def term(d):
        return d + 2 + Fraction(3 * n - 9, d)

    case_tag, case_bound = _case_of(n, delta)
    return PlanarBound(
        per_vertex=float(max(term(d) for d in set(degrees))),
        envelope=float(max(term(3), term(delta))),
        case_tag=case_tag,
        case_bound=float(case_bound),
    )


def bound_report(graph, tol=None):
    """
    Compute q(G) and compare it against every applicable closed-form bound.

    Arguments:
        graph (Graph): a connected graph with at least one edge.
        tol (float): power-iteration tolerance, QPLANAR_TOLERANCE by default.

    Returns:
        BoundReport: planar fields are filled only for maximal planar graphs with n >= 6.
    """
    lower = lower_bound_delta(graph)
    result = q_max(graph, tol=tol)
    planar = None
    if graph.n >= 6 and is_maximal_planar(graph):
        planar = planar_degree_bound(graph)
    return BoundReport(
        n=graph.n,
        m=graph.m,
        q=result.q,
        residual=result.residual,
        lower_delta=lower,
        merris=merris_bound(graph),
        planar_bound=planar.per_vertex if planar else None,
        case_tag=planar.case_tag if planar else None,
        case_bound=planar.case_bound if planar else None,
    )


def h_identities(n, result=None, tol=1e-8):
    """
    Check the eigenvector identities of ``build_H(n)``.

    The Perron vector is rescaled to sum 1 and indexed so that 0 and 1 are the
    hubs and 2..n-1 the path. The checks are, in order:

    * ``hub_symmetry``: x0 = x1.
    * ``end_symmetry``: x2 = x(n-1).
    * ``hub_entry``: x0 (q - n + 2) = 1.
    * ``path_end_entry``: x2 = (2(n-2) - (q-n)(q-6)) / (4(q-n+2)).
    * ``hub_dominates``: x0 > x2.
    * ``quadratic``: q^2 - (6+n) q + 4n + 8 > 0.
    * ``above_n_plus_2``: q > n + 2.

    Arguments:
        n (int): order, at least 5.
        result (SpectralResult): eigenpair of ``build_H(n)``; computed when None.
        tol (float): tolerance of the equality checks.

    Returns:
        IdentityCheck: one verdict and one compared quantity per identity.
    """
    if n < 5:
        raise GraphPreconditionError(operation="h_identities", message=f"needs n >= 5, got {n}")
    if result is None:
        result = q_max(build_H(n))
    if len(result.perron) != n:
        raise GraphPreconditionError(operation="h_identities", message="eigenvector length does not match n")
    q = result.q
    x = standard_vector(result)
    path_end = (2 * (n - 2) - (q - n) * (q - 6)) / (4 * (q - n + 2))
    quadratic = q * q - (6 + n) * q + 4 * n + 8
    values = {
        "hub_symmetry": float(abs(x[0] - x[1])),
        "end_symmetry": float(abs(x[2] - x[n - 1])),
        "hub_entry": float(x[0] * (q - n + 2)),
        "path_end_entry": float(path_end),
        "hub_dominates": float(x[0] - x[2]),
        "quadratic": float(quadratic),
        "above_n_plus_2": float(q - (n + 2)),
    }
    checks = {
        "hub_symmetry": values["hub_symmetry"] <= tol,
        "end_symmetry": values["end_symmetry"] <= tol,
        "hub_entry": abs(values["hub_entry"] - 1) <= tol,
        "path_end_entry": bool(np.isclose(x[2], path_end, rtol=0, atol=tol)),
        "hub_dominates": values["hub_dominates"] > 0,
        "quadratic": quadratic > 0,
        "above_n_plus_2": q > n + 2,
    }
    check = IdentityCheck(n=n, q=q, checks=checks, values=values)
    if not check.passed:
        logger.warning("identities of H(%d) failed: %s", n, ", ".join(check.failures))
    return check
