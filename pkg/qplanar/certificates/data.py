"""
Data attributes for exact certificates ``f(Q) x <= r x``.

Every number in these records is a ``fractions.Fraction``; serialized, it becomes a ``"p/q"`` string.
"""
from fractions import Fraction
from typing import List

import attr

from qplanar.data import JsonRecordMixin, parse_fraction
from qplanar.exceptions import CertificateError

MAX_POLY_DEGREE = 4


def _to_fractions(value):
    return tuple(Fraction(item) for item in value)


def _check_vector(instance, attribute, value):  # pylint: disable=unused-argument
    """
    Ensure the vector is entrywise nonnegative and not zero.
    """
    if any(item < 0 for item in value):
        raise CertificateError(lemma_tag=instance.lemma_tag, message="vector has a negative entry")
    if not any(value):
        raise CertificateError(lemma_tag=instance.lemma_tag, message="vector is zero")


def _check_poly(instance, attribute, value):  # pylint: disable=unused-argument
    """
    Ensure the polynomial has between 1 and MAX_POLY_DEGREE + 1 coefficients.
    """
    if not value or len(value) > MAX_POLY_DEGREE + 1:
        raise CertificateError(
            lemma_tag=instance.lemma_tag, message=f"polynomial degree must be between 0 and {MAX_POLY_DEGREE}"
        )


@attr.s(frozen=True)
class Certificate(JsonRecordMixin):
    """
    Candidate proof that ``f(q(G)) <= r``.

    Attributes:
        x (tuple of Fraction): nonnegative, nonzero test vector indexed by vertex.
        r (Fraction): target bound.
        lemma_tag (str): tag of the construction that produced the vector.
        poly (tuple of Fraction): coefficients ``c0, c1, ...`` of ``f(t) = c0 + c1 t + ...``.
          Defaults to the identity ``f(t) = t``.
    """

    lemma_tag = attr.ib(type=str)
    x = attr.ib(type=List[Fraction], converter=_to_fractions, validator=_check_vector)
    r = attr.ib(type=Fraction, converter=Fraction)
    poly = attr.ib(type=List[Fraction], converter=_to_fractions, default=(0, 1), validator=_check_poly)

    @classmethod
    def from_json_data(cls, data):
        """
        Rebuild a certificate from its json-compatible dictionary.
        """
        return cls(
            lemma_tag=data["lemma_tag"],
            x=[parse_fraction(item) for item in data["x"]],
            r=parse_fraction(data["r"]),
            poly=[parse_fraction(item) for item in data.get("poly", ["0", "1"])],
        )


@attr.s(frozen=True)
class CertificateVerdict(JsonRecordMixin):
    """
    Outcome of an exact certificate check.

    Attributes:
        lemma_tag (str): tag of the checked certificate.
        passed (bool): whether every row satisfies ``(f(Q) x)_i <= r x_i``.
        r (Fraction): the certificate's target.
        worst_slack (Fraction): ``min over i of r x_i - (f(Q) x)_i``; negative when the check fails.
        worst_vertex (int): a vertex attaining ``worst_slack``.
    """

    lemma_tag = attr.ib(type=str)
    passed = attr.ib(type=bool)
    r = attr.ib(type=Fraction)
    worst_slack = attr.ib(type=Fraction)
    worst_vertex = attr.ib(type=int)

    serialize_as_value = True

    @property
    def label(self):
        return "PASS" if self.passed else "FAIL"

    def to_json_data(self):
        data = super().to_json_data()
        data["verdict"] = self.label
        return data


@attr.s(frozen=True)
class StructureClass(JsonRecordMixin):
    """
    Degree census of a maximal planar graph against the middle band of its regime.

    Attributes:
        n (int): order of the graph.
        regime (str): ``"n-1"`` or ``"n-2"``, the value of Δ.
        delta_max (int): Δ.
        delta_second (int): Δ′, counted with multiplicity.
        hub (int): the vertex labeled v1, the smallest vertex of degree Δ.
        second_hub (int): the vertex labeled v2, the smallest vertex other than ``hub`` of degree Δ′.
        band (tuple of Fraction): inclusive ``(low, high)`` degree thresholds of the middle band.
        band_members (tuple of int): vertices other than ``hub`` whose degree lies in the band.
        above_band (int): vertices other than ``hub`` whose degree exceeds ``high``.
    """

    n = attr.ib(type=int)
    regime = attr.ib(type=str, validator=attr.validators.in_(("n-1", "n-2")))
    delta_max = attr.ib(type=int)
    delta_second = attr.ib(type=int)
    hub = attr.ib(type=int)
    second_hub = attr.ib(type=int)
    band = attr.ib(type=List[Fraction])
    band_members = attr.ib(type=List[int], converter=tuple)
    above_band = attr.ib(type=int)

    @property
    def k_mid(self):
        return len(self.band_members)

    @property
    def hub_vertices(self):
        return (self.hub, self.second_hub)

    def to_json_data(self):
        data = super().to_json_data()
        data["k_mid"] = self.k_mid
        return data


@attr.s(frozen=True)
class Attempt(JsonRecordMixin):
    """
    One construction tried while certifying a graph.

    Attributes:
        lemma_tag (str): tag of the construction.
        outcome (str): ``"pass"``, ``"fail"`` or ``"skipped"``.
        reason (str): the unmet hypothesis when skipped, the worst slack otherwise.
    """

    lemma_tag = attr.ib(type=str)
    outcome = attr.ib(type=str, validator=attr.validators.in_(("pass", "fail", "skipped")))
    reason = attr.ib(type=str, default="")


@attr.s(frozen=True)
class CertificationReport(JsonRecordMixin):
    """
    Result of trying to prove ``q(G) <= n + 2`` for a maximal planar graph.

    Attributes:
        n (int): order of the graph.
        m (int): number of edges.
        delta_max (int): Δ.
        delta_second (int): Δ′.
        certified (bool): whether some construction proved the bound.
        lemma_tag (str): tag of the successful construction, None when uncertified.
        bound (Fraction): the proven bound ``n + 2``.
        verdict (CertificateVerdict): exact check of the successful certificate, None when no
          vector was needed or none passed.
        attempts (list of Attempt): every construction tried, in dispatch order.
        gaps (list of int): runs of link-cycle vertices of v1 missed by v2, when v2 ~ v1.
    """

    n = attr.ib(type=int)
    m = attr.ib(type=int)
    delta_max = attr.ib(type=int)
    delta_second = attr.ib(type=int)
    certified = attr.ib(type=bool)
    lemma_tag = attr.ib(type=str, default=None)
    bound = attr.ib(type=Fraction, default=None)
    verdict = attr.ib(type=CertificateVerdict, default=None)
    attempts = attr.ib(type=List[Attempt], factory=list)
    gaps = attr.ib(type=List[int], default=None)

    @property
    def status(self):
        return "certified" if self.certified else "uncertified"

    def to_json_data(self):
        data = super().to_json_data()
        data["status"] = self.status
        return data

