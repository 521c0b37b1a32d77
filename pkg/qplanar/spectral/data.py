"""
Data attributes for spectral computations on signless Laplacians.
"""
from typing import Dict, List

import attr

from qplanar.data import JsonRecordMixin


@attr.s(frozen=True)
class SpectralResult(JsonRecordMixin):
    """
    Largest eigenpair of Q(G) found by power iteration.

    Attributes:
        q (float): estimate of the largest eigenvalue q(G).
        perron (numpy.ndarray): unit 2-norm eigenvector estimate, entrywise nonnegative.
        residual (float): ``||Q x - q x||_inf`` of the returned pair.
        iterations (int): number of matrix-vector products performed.
        connected (bool): whether G is connected. Perron positivity is only claimed when True.
    """

    q = attr.ib(type=float)
    perron = attr.ib(type=List[float], eq=False)
    residual = attr.ib(type=float)
    iterations = attr.ib(type=int)
    connected = attr.ib(type=bool, default=True)


@attr.s(frozen=True)
class PlanarBound(JsonRecordMixin):
    """
    Degree bounds for the spectral radius of a maximal planar graph.

    Attributes:
        per_vertex (float): max over u of ``d(u) + 2 + (3n - 9) / d(u)``.
        envelope (float): the same expression maximized over the degree range [3, Δ],
          that is ``max(n + 2, Δ + 2 + (3n - 9) / Δ)``.
        case_tag (str): ``"i"`` when Δ = n-1, ``"ii"`` when Δ = n-2, ``"iii"`` when Δ <= n-3.
        case_bound (float): closed form of the case: ``n + 4 - 6/(n-1)``, ``n + 3 - 3/(n-2)`` or ``n + 2``.
    """

    per_vertex = attr.ib(type=float)
    envelope = attr.ib(type=float)
    case_tag = attr.ib(type=str, validator=attr.validators.in_(("i", "ii", "iii")))
    case_bound = attr.ib(type=float)


@attr.s(frozen=True)
class BoundReport(JsonRecordMixin):
    """
    Comparison of the computed q(G) against the closed-form bounds.

    Attributes:
        n (int): number of vertices.
        m (int): number of edges.
        q (float): computed spectral radius.
        residual (float): residual of the eigenpair behind ``q``.
        lower_delta (int): Δ + 1.
        merris (float): the neighbor-degree-average upper bound.
        planar_bound (float): per-vertex planar bound, None unless G is maximal planar with n >= 6.
        case_tag (str): which planar case applies, None when ``planar_bound`` is None.
        case_bound (float): the closed form of that case, None when ``planar_bound`` is None.
    """

    n = attr.ib(type=int)
    m = attr.ib(type=int)
    q = attr.ib(type=float)
    residual = attr.ib(type=float)
    lower_delta = attr.ib(type=int)
    merris = attr.ib(type=float)
    planar_bound = attr.ib(type=float, default=None)
    case_tag = attr.ib(type=str, default=None)
    case_bound = attr.ib(type=float, default=None)

    def holds(self, tol):
        """
        Whether ``lower_delta <= q <= merris`` and ``q <= planar_bound`` hold within ``tol``.
        """
        sandwich = self.lower_delta - tol <= self.q <= self.merris + tol
        if self.planar_bound is None:
            return sandwich
        return sandwich and self.q <= self.planar_bound + tol and self.q <= self.case_bound + tol


@attr.s(frozen=True)
class IdentityCheck(JsonRecordMixin):
    """
    Outcome of checking the eigenvector identities of K2 join P(n-2).

    Attributes:
        n (int): order of the graph.
        q (float): computed spectral radius.
        checks (dict): identity name mapped to whether it held.
        values (dict): identity name mapped to the quantity that was compared.
    """

    n = attr.ib(type=int)
    q = attr.ib(type=float)
    checks = attr.ib(type=Dict[str, bool])
    values = attr.ib(type=Dict[str, float])

    @property
    def passed(self):
        return all(self.checks.values())

    @property
    def failures(self):
        """
        Names of the identities that did not hold, in check order.
        """
        return [name for name, ok in self.checks.items() if not ok]

    def to_json_data(self):
        data = super().to_json_data()
        data["passed"] = self.passed
        data["failures"] = self.failures
        return data
