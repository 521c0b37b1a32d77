"""
Certificate constructions proving ``q(G) <= n + 2`` for maximal planar graphs with Δ >= n - 2.

Each construction assigns weight 1 to the hub v1 and small rationals to the other
vertices; the exact check of ``Q(G) x <= (n + 2) x`` then proves the bound.
"""
from fractions import Fraction

from qplanar.certificates.classify import BAND_CAPS
from qplanar.certificates.tooling import CertificateLemma

# Δ <= n - 3 needs no vector: the planar degree bound already gives n + 2.
MAX_DEGREE_TAG = "max-degree-n-3"


def _no_band(structure):
    """
    Every vertex but the hub lies below the middle band.
    """
    unmet = []
    low = structure.band[0]
    if structure.k_mid or structure.above_band:
        unmet.append(f"every other degree < {low} ({structure.k_mid + structure.above_band} vertices are not)")
    return unmet


def _band_count(structure):
    """
    Between 1 and the cap of middle-band vertices, none above the band.
    """
    cap = BAND_CAPS[structure.regime][0]
    unmet = []
    if not 1 <= structure.k_mid <= cap:
        unmet.append(f"1 <= k <= {cap} middle-band vertices (k = {structure.k_mid})")
    if structure.above_band:
        unmet.append(f"no degree above {structure.band[1]} besides the hub ({structure.above_band} found)")
    return unmet


def _second_hub_at_least(offset):
    """
    Δ′ >= n - offset.
    """
    def hypotheses(structure):
        if structure.delta_second < structure.n - offset:
            return [f"Δ′ >= n - {offset} (Δ′ = {structure.delta_second})"]
        return []

    return hypotheses


def _second_hub_between(low_offset, high_offset):
    """
    n - low_offset <= Δ′ <= n - high_offset.
    """
    def hypotheses(structure):
        n, second = structure.n, structure.delta_second
        if not n - low_offset <= second <= n - high_offset:
            return [f"n - {low_offset} <= Δ′ <= n - {high_offset} (Δ′ = {second})"]
        return []

    return hypotheses


# .. lemma_tag: sparse-n-2
# .. lemma_regime: Δ = n - 2
# .. lemma_hypotheses: n >= 4, every other degree < 1 + n/6
# .. lemma_vector: hub 1, rest 4/(n-1)
SPARSE_N2 = CertificateLemma(
    lemma_tag="sparse-n-2",
    regime="n-2",
    min_n=4,
    weights=lambda n, k: {"hub": Fraction(1), "rest": Fraction(4, n - 1)},
    hypotheses=_no_band,
    description="Δ = n-2 and every other degree < 1 + n/6",
)

# .. lemma_tag: band-n-2
# .. lemma_regime: Δ = n - 2
# .. lemma_hypotheses: n >= 115, 1 <= k <= 12 degrees in [n/6 + 1, n - 61], all others below n/6 + 1
# .. lemma_vector: hub 1, band 1/k, rest 3/(n-k-1)
BAND_N2 = CertificateLemma(
    lemma_tag="band-n-2",
    regime="n-2",
    min_n=115,
    weights=lambda n, k: {"hub": Fraction(1), "band": Fraction(1, k), "rest": Fraction(3, n - k - 1)},
    hypotheses=_band_count,
    description="Δ = n-2 and 1 <= k <= 12 degrees in [n/6 + 1, n - 61]",
)

# .. lemma_tag: second-hub-n-2
# .. lemma_regime: Δ = n - 2
# .. lemma_hypotheses: n >= 380, Δ′ >= n - 62
# .. lemma_vector: hub 1, second hub 1, rest 3/(n-2)
SECOND_HUB_N2 = CertificateLemma(
    lemma_tag="second-hub-n-2",
    regime="n-2",
    min_n=380,
    weights=lambda n, k: {"hub": Fraction(1), "second": Fraction(1), "rest": Fraction(3, n - 2)},
    hypotheses=_second_hub_at_least(62),
    description="Δ = n-2 and Δ′ >= n - 62",
)

# .. lemma_tag: sparse-n-1
# .. lemma_regime: Δ = n - 1
# .. lemma_hypotheses: n >= 6, every other degree < n/7 + 19/7
# .. lemma_vector: hub 1, rest 3/(n-1)
SPARSE_N1 = CertificateLemma(
    lemma_tag="sparse-n-1",
    regime="n-1",
    min_n=6,
    weights=lambda n, k: {"hub": Fraction(1), "rest": Fraction(3, n - 1)},
    hypotheses=_no_band,
    description="Δ = n-1 and every other degree < n/7 + 19/7",
)

# .. lemma_tag: band-n-1
# .. lemma_regime: Δ = n - 1
# .. lemma_hypotheses: n >= 91, 1 <= k <= 13 degrees in [n/7 + 19/7, n - 75], all others below n/7 + 19/7
# .. lemma_vector: hub 1, band 2/(3k), rest 7/(3(n-k-1))
BAND_N1 = CertificateLemma(
    lemma_tag="band-n-1",
    regime="n-1",
    min_n=91,
    weights=lambda n, k: {"hub": Fraction(1), "band": Fraction(2, 3 * k), "rest": Fraction(7, 3 * (n - k - 1))},
    hypotheses=_band_count,
    description="Δ = n-1 and 1 <= k <= 13 degrees in [n/7 + 19/7, n - 75]",
)

# .. lemma_tag: second-hub-n-1
# .. lemma_regime: Δ = n - 1
# .. lemma_hypotheses: n >= 461, n - 81 <= Δ′ <= n - 4
# .. lemma_vector: hub 1, second hub 4/7, rest 17/(7(n-2))
SECOND_HUB_N1 = CertificateLemma(
    lemma_tag="second-hub-n-1",
    regime="n-1",
    min_n=461,
    weights=lambda n, k: {"hub": Fraction(1), "second": Fraction(4, 7), "rest": Fraction(17, 7 * (n - 2))},
    hypotheses=_second_hub_between(81, 4),
    description="Δ = n-1 and n - 81 <= Δ′ <= n - 4",
)

# Cheapest construction first within each regime.
DISPATCH_ORDER = {
    "n-2": (SPARSE_N2, BAND_N2, SECOND_HUB_N2),
    "n-1": (SPARSE_N1, BAND_N1, SECOND_HUB_N1),
}
