"""
Detect a near-extremal configuration, swap one edge and check that q(G) increases.
"""
import logging

from qplanar.exceptions import GraphPreconditionError, SwapError
from qplanar.planarity import is_maximal_planar, is_planar, link_cycle
from qplanar.rewiring.configs import build_config, config_edges, plan_for
from qplanar.rewiring.data import IncreaseCheck, Reduction, SwapReport
from qplanar.spectral import q_max, quadratic_form

logger = logging.getLogger(__name__)

MIN_SWAP_ORDER = 15
IDENTITY_TOLERANCE = 1e-8


def _classify_missed(missed):
    """
    Configuration name and ``(k, l)`` for the sorted cycle labels v2 misses.
    """
    if len(missed) == 1:
        return "single", missed[0], None
    first, second = missed
    if second == first + 1:
        return "wide", first, None
    if second == first + 2:
        return "near", first + 1, None
    return "apart", first, second


def _check_swap_preconditions(graph):
    n = graph.n
    if n < MIN_SWAP_ORDER:
        raise SwapError(message=f"needs n >= {MIN_SWAP_ORDER}, got {n}")
    degrees = sorted(graph.degrees(), reverse=True)
    if degrees[0] != n - 1:
        raise SwapError(message=f"needs Δ = n - 1, got Δ = {degrees[0]}")
    if degrees[1] not in (n - 2, n - 3):
        raise SwapError(message=f"needs Δ′ in {{n - 2, n - 3}}, got Δ′ = {degrees[1]}")
    if not is_maximal_planar(graph):
        raise SwapError(message="graph is not maximal planar")
    return degrees[1]


def detect_config(graph):
    """
    Recognize which configuration ``graph`` is and plan its swap.

    v1 is the vertex of degree n-1 and v2 a vertex of degree Δ′; ``v2 .. vn`` follow the
    link cycle of v1 in either direction. The configuration is read from the cycle
    vertices v2 misses and confirmed by comparing every edge with the template. When
    both directions match, the one giving the smaller ``(k, l)`` is kept.

    Returns:
        SwapPlan: the matching configuration's swap, in the vertices of ``graph``.
        None when no configuration matches, which the case analysis rules out.

    Raises:
        SwapError: If n < 15, Δ != n-1, Δ′ is not n-2 or n-3, or the graph is not maximal planar.
    """
    second_degree = _check_swap_preconditions(graph)
    n = graph.n
    degrees = graph.degrees()
    hub = degrees.index(n - 1)
    cycle = list(link_cycle(graph, is_planar(graph), hub))
    edges = {frozenset(edge) for edge in graph.edges()}
    matches = []

    for second in (v for v in range(n) if v != hub and degrees[v] == second_degree):
        for direction in (cycle, [cycle[0]] + cycle[:0:-1]):
            start = direction.index(second)
            labels = (hub,) + tuple(direction[start:] + direction[:start])
            missed = [i for i in range(4, n) if not graph.has_edge(second, labels[i - 1])]
            if not 1 <= len(missed) <= 2:
                continue
            config, k, l = _classify_missed(missed)  # noqa: E741
            template = {frozenset((labels[u - 1], labels[v - 1])) for u, v in config_edges(config, n, k, l)}
            if template == edges:
                matches.append(plan_for(config, n, k, l, labels=labels))
    if matches:
        plan = min(matches, key=lambda match: (match.k, match.l or 0))
        logger.debug("detected %s (k=%s, l=%s) on n=%d", plan.config, plan.k, plan.l, n)
        return plan
    logger.error("no configuration matches a graph with n=%d, Δ′=%d", n, second_degree)
    return None


def apply_swap(graph, plan):
    """
    Return ``F = G - plan.remove + plan.add``.

    Raises:
        SwapError: If the plan does not fit the graph or F is not maximal planar.
    """
    if not graph.has_edge(*plan.remove):
        raise SwapError(config=plan.config, message=f"edge {plan.remove} is not in the graph")
    if graph.has_edge(*plan.add):
        raise SwapError(config=plan.config, message=f"edge {plan.add} is already in the graph")
    swapped = graph.remove_edge(*plan.remove).add_edge(*plan.add)
    if not is_maximal_planar(swapped):
        raise SwapError(config=plan.config, message="swap does not keep the graph maximal planar")
    return swapped


def _single_swap(graph, swapped):
    if graph.n != swapped.n:
        raise SwapError(message="graphs have different orders")
    before, after = set(graph.edges()), set(swapped.edges())
    removed, added = before - after, after - before
    if len(removed) != 1 or len(added) != 1:
        raise SwapError(
            message=f"graphs differ by {len(removed)} removed and {len(added)} added edges, expected one swap"
        )
    return removed.pop(), added.pop()


def perron_orderings(graph, plan, result=None):
    """
    Perron-entry inequalities that make the swap of ``plan`` increase q(G).

    Arguments:
        graph (Graph): the configuration.
        plan (SwapPlan): its detected swap.
        result (SpectralResult): eigenpair of ``graph``; computed when None.

    Returns:
        dict: readable inequality, in the labels ``x1..xn`` of the configuration, to whether it holds.
    """
    result = result or q_max(graph)
    k, l = plan.k, plan.l  # noqa: E741

    def x(index):
        return float(result.perron[plan.vertex(index)])

    if plan.config == "single":
        return {
            "x2 > xk": x(2) > x(k),
            "x2 + xk > x(k-1) + x(k+1)": x(2) + x(k) > x(k - 1) + x(k + 1),
        }
    if plan.config == "wide":
        return {
            "xk > x(k+1)": x(k) > x(k + 1),
            "x(k-1) + x(k+1) > xk": x(k - 1) + x(k + 1) > x(k),
            "x2 > x(k+1)": x(2) > x(k + 1),
            "x2 > xk": x(2) > x(k),
            "x2 > x(k-1)": x(2) > x(k - 1),
            "x2 > x(k+2)": x(2) > x(k + 2),
            "x2 + xk > x(k-1) + x(k+2)": x(2) + x(k) > x(k - 1) + x(k + 2),
        }
    if plan.config == "near":
        return {
            "x2 > x(k+1)": x(2) > x(k + 1),
            "x2 > x(k-1)": x(2) > x(k - 1),
            "x2 > xk": x(2) > x(k),
            "x2 > x(k+2)": x(2) > x(k + 2),
            "x2 + x(k+1) > xk + x(k+2)": x(2) + x(k + 1) > x(k) + x(k + 2),
        }
    return {
        "x2 > xl": x(2) > x(l),
        "x2 + xl > x(l-1) + x(l+1)": x(2) + x(l) > x(l - 1) + x(l + 1),
    }


def verify_increase(graph, swapped, plan=None, tol=None):
    """
    Check that one edge swap increases q, by eigensolve and by the Rayleigh difference.

    With X the unit Perron vector of G, the quadratic forms of G and F at X differ by
    ``(x_a + x_b)^2 - (x_c + x_d)^2`` for added edge ``ab`` and removed edge ``cd``;
    when that is positive, ``q(F) > X^T Q(F) X > X^T Q(G) X = q(G)``.

    Arguments:
        graph (Graph): G, connected.
        swapped (Graph): F, differing from G by one swap.
        plan (SwapPlan): the detected swap; adds the configuration's Perron orderings.
        tol (float): power-iteration tolerance, QPLANAR_TOLERANCE by default.

    Returns:
        IncreaseCheck: every check with its outcome; failures are reported, not raised.

    Raises:
        SwapError: If F does not differ from G by exactly one swap.
        GraphPreconditionError: If G is disconnected.
    """
    (c, d), (a, b) = _single_swap(graph, swapped)
    if not graph.is_connected():
        raise GraphPreconditionError(operation="verify_increase", message="graph is disconnected")
    before = q_max(graph, tol=tol)
    after = q_max(swapped, tol=tol)
    x = before.perron
    rayleigh_before = quadratic_form(graph, x)
    rayleigh_after = quadratic_form(swapped, x)
    predicted = float((x[a] + x[b]) ** 2 - (x[c] + x[d]) ** 2)
    conditions = perron_orderings(graph, plan, before) if plan else {}
    conditions["swap gain is positive"] = predicted > 0
    check = IncreaseCheck(
        q_before=before.q,
        q_after=after.q,
        rayleigh_before=rayleigh_before,
        rayleigh_after=rayleigh_after,
        predicted_difference=predicted,
        identity_holds=abs(rayleigh_after - rayleigh_before - predicted) <= IDENTITY_TOLERANCE,
        sign_conditions=conditions,
        eigen_increase=after.q > before.q,
    )
    if not check.passed:
        logger.warning("swap check failed on n=%d: %s", graph.n, check.to_json())
    return check


def is_H(graph):  # pylint: disable=invalid-name
    """
    Whether a maximal planar graph is K2 join P_{n-2}: two vertices are adjacent to all others.
    """
    degrees = sorted(graph.degrees(), reverse=True)
    return graph.n >= 4 and degrees[1] == graph.n - 1


def reduce_to_H(graph, max_steps=3):  # pylint: disable=invalid-name
    """
    Swap until the graph is isomorphic to H.

    ``wide``, ``near`` and ``apart`` swaps produce a ``single`` configuration, whose
    swap produces H, so at most two steps are taken from a configuration.

    Returns:
        Reduction: the swaps, the value of q along the chain and the final graph.

    Raises:
        SwapError: If a graph of the chain matches no configuration or the chain is too long.
    """
    steps = []
    values = [q_max(graph).q]
    current = graph
    while not is_H(current):
        if len(steps) >= max_steps:
            raise SwapError(message=f"no graph isomorphic to H after {max_steps} swaps")
        plan = detect_config(current)
        if plan is None:
            raise SwapError(message="graph matches no configuration")
        current = apply_swap(current, plan)
        steps.append(plan)
        values.append(q_max(current).q)
        logger.info("swap %d (%s): q %.12g -> %.12g", len(steps), plan.config, values[-2], values[-1])
    return Reduction(steps=steps, q_values=values, final=current)


def swap_demo(config, n, k, l=None):  # noqa: E741
    """
    Build a configuration, detect it, apply its swap and check the increase of q.

    Raises:
        GraphConstructionError: If ``(n, k, l)`` is out of range for ``config``.
        SwapError: If the built graph is not recognized.
    """
    graph = build_config(config, n, k, l)
    plan = detect_config(graph)
    if plan is None:
        raise SwapError(config=config, message=f"built configuration with n={n}, k={k} was not recognized")
    swapped = apply_swap(graph, plan)
    return SwapReport(n=n, plan=plan, check=verify_increase(graph, swapped, plan), result_is_H=is_H(swapped))
