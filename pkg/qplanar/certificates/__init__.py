"""
Exact certificates ``Q(G) x <= r x`` and the constructions proving ``q(G) <= n + 2``.
"""
from qplanar.certificates.classify import band_thresholds, classify, regime_of
from qplanar.certificates.data import (
    Attempt,
    Certificate,
    CertificateVerdict,
    CertificationReport,
    StructureClass,
)
from qplanar.certificates.dispatch import build_vector, certify_upper
from qplanar.certificates.fixtures import FIXTURE_KINDS, build_fixture
from qplanar.certificates.lemmas import DISPATCH_ORDER, MAX_DEGREE_TAG
from qplanar.certificates.tooling import CertificateLemma
from qplanar.certificates.verify import apply_poly, verify_certificate

__all__ = [
    "Attempt",
    "Certificate",
    "CertificateLemma",
    "CertificateVerdict",
    "CertificationReport",
    "DISPATCH_ORDER",
    "FIXTURE_KINDS",
    "MAX_DEGREE_TAG",
    "StructureClass",
    "apply_poly",
    "band_thresholds",
    "build_fixture",
    "build_vector",
    "certify_upper",
    "classify",
    "regime_of",
    "verify_certificate",
]
