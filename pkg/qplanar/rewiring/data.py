"""
Data attributes for the edge swaps that move a near-extremal triangulation toward H.
"""
from typing import Dict, List

import attr

from qplanar.data import JsonRecordMixin, format_float
from qplanar.graphs import Graph

# Configurations with Δ = n-1, named by the cycle vertices v2 misses:
#   single  v_k                     (Δ′ = n-2)
#   wide    v_k and v_{k+1}         (Δ′ = n-3)
#   near    v_{k-1} and v_{k+1}     (Δ′ = n-3)
#   apart   v_k and v_l, l >= k+3   (Δ′ = n-3)
CONFIGS = ("single", "wide", "near", "apart")


def _to_edge(value):
    return tuple(value)


@attr.s(frozen=True)
class SwapPlan(JsonRecordMixin):
    """
    One edge swap ``G - remove + add`` on a detected configuration.

    Attributes:
        config (str): one of ``single``, ``wide``, ``near`` or ``apart``.
        remove (tuple): edge of G to delete, as vertices of G.
        add (tuple): non-edge of G to insert, as vertices of G.
        k (int): index of the configuration's first missed vertex in the labeling ``v1..vn``.
        l (int): index of the second missed vertex, ``apart`` only.
        labels (tuple of int): ``labels[i - 1]`` is the vertex of G labeled ``v_i``: v1 is the
          hub, v2 the second hub and ``v2, v3, ..., vn`` the link cycle of v1.
    """

    config = attr.ib(type=str, validator=attr.validators.in_(CONFIGS))
    remove = attr.ib(type=List[int], converter=_to_edge)
    add = attr.ib(type=List[int], converter=_to_edge)
    k = attr.ib(type=int)
    l = attr.ib(type=int, default=None)  # noqa: E741
    labels = attr.ib(type=List[int], converter=tuple, default=())

    def vertex(self, index):
        """
        Vertex of G labeled ``v_index``.
        """
        return self.labels[index - 1]


@attr.s(frozen=True)
class IncreaseCheck(JsonRecordMixin):
    """
    Evidence that a swap increases the spectral radius.

    With X the unit Perron vector of G, ``X^T Q(F) X - X^T Q(G) X`` equals
    ``(x_a + x_b)^2 - (x_c + x_d)^2`` for the added edge ``ab`` and removed edge ``cd``.

    Attributes:
        q_before (float): q(G).
        q_after (float): q(F).
        rayleigh_before (float): ``X^T Q(G) X``.
        rayleigh_after (float): ``X^T Q(F) X``.
        predicted_difference (float): ``(x_a + x_b)^2 - (x_c + x_d)^2``.
        identity_holds (bool): whether the measured difference matches the prediction.
        sign_conditions (dict): named Perron-entry inequalities and whether each holds.
        eigen_increase (bool): whether ``q(F) > q(G)``.
    """

    q_before = attr.ib(type=float)
    q_after = attr.ib(type=float)
    rayleigh_before = attr.ib(type=float)
    rayleigh_after = attr.ib(type=float)
    predicted_difference = attr.ib(type=float)
    identity_holds = attr.ib(type=bool)
    sign_conditions = attr.ib(type=Dict[str, bool], factory=dict)
    eigen_increase = attr.ib(type=bool, default=False)

    serialize_as_value = True

    @property
    def difference(self):
        return self.rayleigh_after - self.rayleigh_before

    @property
    def gap(self):
        return self.q_after - self.q_before

    @property
    def passed(self):
        return self.identity_holds and self.eigen_increase and all(self.sign_conditions.values())

    def to_json_data(self):
        data = super().to_json_data()
        data.update(difference=format_float(self.difference), gap=format_float(self.gap), passed=self.passed)
        return data


@attr.s(frozen=True)
class Reduction(JsonRecordMixin):
    """
    Chain of swaps from a configuration to a graph isomorphic to H.

    Attributes:
        steps (tuple of SwapPlan): swaps in the order applied.
        q_values (tuple of float): q of the start graph and after every swap.
        final (Graph): the last graph of the chain.
    """

    steps = attr.ib(type=List[SwapPlan], converter=tuple)
    q_values = attr.ib(type=List[float], converter=tuple)
    final = attr.ib(type=Graph)

    @property
    def increasing(self):
        return all(before < after for before, after in zip(self.q_values, self.q_values[1:]))


@attr.s(frozen=True)
class SwapReport(JsonRecordMixin):
    """
    One configuration built, detected, swapped and checked.

    Attributes:
        n (int): order of the configuration.
        plan (SwapPlan): the detected swap.
        check (IncreaseCheck): evidence that the swap raises q.
        result_is_H (bool): whether the swapped graph is isomorphic to H.
    """

    n = attr.ib(type=int)
    plan = attr.ib(type=SwapPlan)
    check = attr.ib(type=IncreaseCheck)
    result_is_H = attr.ib(type=bool)  # pylint: disable=invalid-name

    @property
    def passed(self):
        return self.check.passed

    def to_json_data(self):
        data = super().to_json_data()
        data["passed"] = self.passed
        return data
