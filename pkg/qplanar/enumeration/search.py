"""
Exhaustive search for the triangulation of largest signless Laplacian spectral radius.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from qplanar import conf
from qplanar.enumeration.canonical import canonical_form, is_isomorphic
from qplanar.enumeration.data import SearchResult
from qplanar.enumeration.generate import KNOWN_CENSUS, gen_triangulations
from qplanar.enumeration.planar_code import read_planar_code
from qplanar.exceptions import EnumerationError
from qplanar.graphs import build_H
from qplanar.spectral import q_max

logger = logging.getLogger(__name__)

GENERATED = "generated"


def _spectral_radius(task):
    graph, tol, max_iter, dense_limit = task
    return q_max(graph, tol=tol, max_iter=max_iter, dense_limit=dense_limit).q


def _evaluate(graphs, tol, jobs):
    """
    q(G) of every graph, in worker processes when ``jobs > 1``.

    Settings are resolved in the parent process; workers never read Django settings.
    """
    max_iter, dense_limit = conf.get_max_iterations(), conf.get_dense_limit()
    tasks = [(graph, tol, max_iter, dense_limit) for graph in graphs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            return list(executor.map(_spectral_radius, tasks, chunksize=16))
    return [_spectral_radius(task) for task in tasks]


def load_classes(n, source=GENERATED, jobs=None):
    """
    Triangulation classes on ``n`` vertices from the generator or a planar_code file.

    A file is deduplicated by canonical form and graphs of another order are skipped.
    The class count is compared with the known census: a mismatch from the generator
    raises, a mismatch from a file is logged.

    Raises:
        EnumerationError: If generation misses the census.
    """
    if source == GENERATED:
        graphs = list(gen_triangulations(n, jobs=jobs))
        if KNOWN_CENSUS[n] != len(graphs):
            raise EnumerationError(
                message=f"generated {len(graphs)} classes on {n} vertices, expected {KNOWN_CENSUS[n]}"
            )
        return graphs

    classes = {}
    for graph in read_planar_code(Path(source).read_bytes()):
        if graph.n == n:
            classes.setdefault(canonical_form(graph), graph)
    graphs = [classes[key] for key in sorted(classes)]
    if KNOWN_CENSUS.get(n) != len(graphs):
        logger.warning("%s holds %d classes on %d vertices, census is %s", source, len(graphs), n, KNOWN_CENSUS.get(n))
    return graphs


def extremal_search(n, source=GENERATED, jobs=None):
    """
    Find the class maximizing q(G) among the triangulations on ``n`` vertices.

    Every class is evaluated at QPLANAR_TOLERANCE. When the two largest values are
    closer than QPLANAR_TIE_GAP, every class within that gap of the top is re-evaluated
    at QPLANAR_HIGH_PRECISION_TOLERANCE before the argmax is declared. Remaining ties
    are reported in ``maximizers``.

    Arguments:
        n (int): order, 4 <= n <= 12 for generated classes.
        source (str): ``"generated"`` or the path of a planar_code file.
        jobs (int): worker processes; QPLANAR_JOBS when None.

    Returns:
        SearchResult: the maximizer and the value of every class.

    Raises:
        EnumerationError: If generation is out of range or misses the census, or no class is found.
    """
    jobs = jobs or conf.get_jobs()
    graphs = load_classes(n, source=source, jobs=jobs)
    if not graphs:
        raise EnumerationError(message=f"no triangulation on {n} vertices in {source}")
    values = _evaluate(graphs, conf.get_tolerance(), jobs)

    ranking = sorted(range(len(values)), key=lambda index: -values[index])
    escalated = False
    if len(ranking) > 1 and values[ranking[0]] - values[ranking[1]] < conf.get_tie_gap():
        escalated = True
        close = [index for index in ranking if values[ranking[0]] - values[index] < conf.get_tie_gap()]
        logger.info("n=%d: %d candidates within the tie gap, re-evaluating at high precision", n, len(close))
        precise = _evaluate([graphs[index] for index in close], conf.get_high_precision_tolerance(), jobs)
        for index, value in zip(close, precise):
            values[index] = value
        ranking = sorted(range(len(values)), key=lambda index: -values[index])

    best_index = ranking[0]
    best_q = values[best_index]
    margin = 2 * conf.get_high_precision_tolerance() * max(1.0, best_q) if escalated else 0.0
    maximizers = [index for index in ranking if best_q - values[index] <= margin]
    if len(maximizers) > 1:
        logger.warning("n=%d: %d classes tie for the largest q = %.12g", n, len(maximizers), best_q)
    runner_up = next((values[index] for index in ranking if index not in maximizers), None)

    best = graphs[best_index]
    result = SearchResult(
        n=n,
        count=len(graphs),
        best=best,
        best_q=best_q,
        runner_up_q=runner_up,
        is_H=is_isomorphic(best, build_H(n)),
        maximizers=maximizers,
        escalated=escalated,
        q_values=values,
    )
    logger.info("n=%d: best q = %.12g over %d classes (H: %s)", n, best_q, len(graphs), result.is_H)
    return result
