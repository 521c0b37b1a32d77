"""
Tooling to declare the certificate constructions for ``q(G) <= n + 2``.
"""
from fractions import Fraction
from logging import getLogger

from qplanar.certificates.data import Certificate
from qplanar.exceptions import CertificateError

log = getLogger(__name__)


class CertificateLemma:
    """
    Piecewise-constant certificate vector with its structural hypotheses.

    Vertices are split into roles: ``hub`` (v1), ``second`` (v2), ``band`` (the
    middle-band vertices) and ``rest``. A construction assigns one rational weight
    per role it uses; unused roles fall into ``rest``.
    """

    _mapping = {}
    instances = []

    def __init__(self, lemma_tag, regime, min_n, weights, hypotheses, description=""):
        """
        Init method for CertificateLemma definition class.

        Arguments:
            lemma_tag (str): name of the construction.
            regime (str): ``"n-1"`` or ``"n-2"``, the value of Δ the construction needs.
            min_n (int): smallest order the construction is stated for.
            weights (callable): ``weights(n, k)`` returning a dict from role to Fraction.
            hypotheses (callable): ``hypotheses(structure)`` returning the list of unmet
              thresholds, each as a readable string.
            description (str): one-line description of the hypotheses.
        """
        self.lemma_tag = lemma_tag
        self.regime = regime
        self.min_n = min_n
        self.weights = weights
        self.hypotheses = hypotheses
        self.description = description
        self.__class__.instances.append(self)
        self.__class__._mapping[self.lemma_tag] = self

    def __repr__(self):
        """
        Represent CertificateLemma as a string.
        """
        return "<CertificateLemma: {lemma_tag}>".format(lemma_tag=self.lemma_tag)

    @classmethod
    def all_lemmas(cls):
        """
        Get all declared constructions.
        """
        return cls.instances

    @classmethod
    def get_lemma_by_tag(cls, lemma_tag):
        """
        Get construction identified by tag.

        Raises:
            CertificateError: If no construction has this tag.
        """
        try:
            return cls._mapping[lemma_tag]
        except KeyError as exc:
            raise CertificateError(lemma_tag=lemma_tag, message="unknown construction") from exc

    def unmet_hypotheses(self, structure):
        """
        List the unmet hypotheses of this construction on a classified graph.
        """
        unmet = []
        if structure.n < self.min_n:
            unmet.append(f"n >= {self.min_n} (n = {structure.n})")
        if structure.regime != self.regime:
            unmet.append(f"Δ = {self.regime} (Δ = {structure.delta_max})")
            return unmet
        unmet.extend(self.hypotheses(structure))
        return unmet

    def build_vector(self, structure):
        """
        Build this construction's certificate for a classified graph, with target ``n + 2``.

        Raises:
            CertificateError: If a hypothesis is unmet; the message names the threshold.
        """
        unmet = self.unmet_hypotheses(structure)
        if unmet:
            raise CertificateError(lemma_tag=self.lemma_tag, message="unmet hypothesis: " + "; ".join(unmet))
        weights = self.weights(structure.n, structure.k_mid)
        x = [weights["rest"]] * structure.n
        if "band" in weights:
            for v in structure.band_members:
                x[v] = weights["band"]
        if "second" in weights:
            x[structure.second_hub] = weights["second"]
        x[structure.hub] = weights["hub"]
        return Certificate(lemma_tag=self.lemma_tag, x=x, r=Fraction(structure.n + 2))
