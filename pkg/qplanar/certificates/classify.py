"""
Degree census of maximal planar graphs with a dominating or almost dominating vertex.
"""
from fractions import Fraction

from qplanar.certificates.data import StructureClass
from qplanar.exceptions import CertificateError, GraphPreconditionError
from qplanar.graphs import degree_profile

REGIMES = ("n-1", "n-2")

# Largest middle-band count a maximal planar graph admits, and the order from which it holds.
BAND_CAPS = {"n-2": (12, 115), "n-1": (13, 91)}


def band_thresholds(n, regime):
    """
    Inclusive ``(low, high)`` middle-band degree thresholds of a regime.

    Δ = n-2 uses ``[n/6 + 1, n - 61]``; Δ = n-1 uses ``[n/7 + 19/7, n - 75]``.
    """
    if regime == "n-2":
        return Fraction(n, 6) + 1, Fraction(n - 61)
    if regime == "n-1":
        return Fraction(n, 7) + Fraction(19, 7), Fraction(n - 75)
    raise GraphPreconditionError(operation="classify", message=f"unknown regime {regime!r}; expected one of {REGIMES}")


def regime_of(graph):
    """
    ``"n-1"`` or ``"n-2"`` when Δ takes that value, None otherwise.
    """
    delta = max(graph.degrees()) if graph.n else 0
    return {graph.n - 1: "n-1", graph.n - 2: "n-2"}.get(delta)


def classify(graph, regime):
    """
    Classify the vertices of a maximal planar graph against the middle band of ``regime``.

    Arguments:
        graph (Graph): a maximal planar graph.
        regime (str): ``"n-1"`` or ``"n-2"``.

    Returns:
        StructureClass: the census.

    Raises:
        GraphPreconditionError: If Δ does not match the regime or the degree sum is not ``6n - 12``.
        CertificateError: If the band count exceeds what the degree sum of a maximal planar
          graph allows. This cannot happen on valid input.
    """
    low, high = band_thresholds(graph.n, regime)
    profile = degree_profile(graph)
    if not profile.satisfies_maximal_planar_census():
        raise GraphPreconditionError(operation="classify", message="degree sum is not 6n - 12")
    if regime_of(graph) != regime:
        raise GraphPreconditionError(
            operation="classify", message=f"Δ = {profile.delta_max} does not match regime Δ = {regime}"
        )
    degrees = graph.degrees()
    hub = degrees.index(profile.delta_max)
    second_hub = next(v for v in range(graph.n) if v != hub and degrees[v] == profile.delta_second)
    band_members = [v for v in range(graph.n) if v != hub and low <= degrees[v] <= high]
    above_band = sum(1 for v in range(graph.n) if v != hub and degrees[v] > high)

    cap, cap_from = BAND_CAPS[regime]
    if graph.n >= cap_from and len(band_members) > cap:
        raise CertificateError(
            lemma_tag=regime,
            message=f"{len(band_members)} middle-band vertices exceed {cap}, impossible with degree sum 6n - 12",
        )
    return StructureClass(
        n=graph.n,
        regime=regime,
        delta_max=profile.delta_max,
        delta_second=profile.delta_second,
        hub=hub,
        second_hub=second_hub,
        band=(low, high),
        band_members=band_members,
        above_band=above_band,
    )
