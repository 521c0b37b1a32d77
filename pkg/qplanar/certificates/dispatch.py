"""
Build lemma vectors and certify ``q(G) <= n + 2`` for maximal planar graphs.
"""
import logging
from fractions import Fraction

from qplanar.certificates.classify import classify, regime_of
from qplanar.certificates.data import Attempt, CertificationReport
from qplanar.certificates.lemmas import DISPATCH_ORDER, MAX_DEGREE_TAG
from qplanar.certificates.tooling import CertificateLemma
from qplanar.certificates.verify import verify_certificate
from qplanar.exceptions import GraphPreconditionError
from qplanar.graphs import degree_profile
from qplanar.planarity import gap_profile, is_maximal_planar

logger = logging.getLogger(__name__)


def build_vector(graph, lemma_tag, structure=None):
    """
    Build the certificate of construction ``lemma_tag`` for ``graph``.

    Arguments:
        graph (Graph): a maximal planar graph.
        lemma_tag (str): tag of a declared CertificateLemma.
        structure (StructureClass): census of the graph; computed for the construction's
          regime when None.

    Raises:
        CertificateError: If the tag is unknown or a hypothesis is unmet.
        GraphPreconditionError: If Δ does not match the construction's regime.
    """
    lemma = CertificateLemma.get_lemma_by_tag(lemma_tag)
    if structure is None:
        structure = classify(graph, lemma.regime)
    return lemma.build_vector(structure)


def _gaps(graph, structure):
    if not graph.has_edge(structure.hub, structure.second_hub):
        return None
    return gap_profile(graph, structure.hub, structure.second_hub)


def certify_upper(graph):
    """
    Try to prove ``q(G) <= n + 2`` with exact arithmetic.

    Δ <= n-3 is settled by the planar degree bound. Otherwise the constructions of
    the graph's regime are tried cheapest first; each one whose hypotheses hold is
    built and checked exactly.

    Returns:
        CertificationReport: certified with the successful construction, or uncertified.

    Raises:
        GraphPreconditionError: If the graph is not maximal planar or not connected.
    """
    if not graph.is_connected() or not is_maximal_planar(graph):
        raise GraphPreconditionError(operation="certify_upper", message="graph must be connected and maximal planar")
    profile = degree_profile(graph)
    n = graph.n
    report = {
        "n": n,
        "m": graph.m,
        "delta_max": profile.delta_max,
        "delta_second": profile.delta_second,
    }
    if profile.delta_max <= n - 3:
        attempts = [Attempt(lemma_tag=MAX_DEGREE_TAG, outcome="pass", reason=f"Δ = {profile.delta_max} <= n - 3")]
        return CertificationReport(
            certified=True, lemma_tag=MAX_DEGREE_TAG, bound=Fraction(n + 2), attempts=attempts, **report
        )

    regime = regime_of(graph)
    structure = classify(graph, regime)
    attempts = []
    for lemma in DISPATCH_ORDER[regime]:
        unmet = lemma.unmet_hypotheses(structure)
        if unmet:
            attempts.append(Attempt(lemma_tag=lemma.lemma_tag, outcome="skipped", reason="; ".join(unmet)))
            continue
        verdict = verify_certificate(graph, lemma.build_vector(structure))
        attempts.append(Attempt(
            lemma_tag=lemma.lemma_tag,
            outcome="pass" if verdict.passed else "fail",
            reason=f"worst slack {verdict.worst_slack} at vertex {verdict.worst_vertex}",
        ))
        if verdict.passed:
            logger.info("n=%d certified q <= n + 2 by %s", n, lemma.lemma_tag)
            return CertificationReport(
                certified=True,
                lemma_tag=lemma.lemma_tag,
                bound=Fraction(n + 2),
                verdict=verdict,
                attempts=attempts,
                gaps=_gaps(graph, structure),
                **report,
            )
        logger.warning("construction %s failed on n=%d: %s", lemma.lemma_tag, n, attempts[-1].reason)
    logger.info("n=%d uncertified (Δ = %d, Δ′ = %d)", n, profile.delta_max, profile.delta_second)
    return CertificationReport(certified=False, attempts=attempts, gaps=_gaps(graph, structure), **report)
