"""
Data attributes for the exhaustive extremal search.
"""
from typing import List

import attr

from qplanar.data import JsonRecordMixin, format_float
from qplanar.graphs import Graph


@attr.s(frozen=True)
class SearchResult(JsonRecordMixin):
    """
    Maximizer of q(G) over every triangulation class of one order.

    Attributes:
        n (int): order of the graphs searched.
        count (int): number of isomorphism classes examined.
        best (Graph): a class attaining the largest q.
        best_q (float): q of ``best``.
        runner_up_q (float): largest q among the other classes, None when there is only one class.
        is_H (bool): whether ``best`` is isomorphic to K2 join P_{n-2}.
        maximizers (tuple of int): indices of every class attaining ``best_q``; more than one
          means a tie.
        escalated (bool): whether the top candidates were re-evaluated at high precision.
        q_values (tuple of float): q of every class, in search order. Left out of the json output.
    """

    n = attr.ib(type=int)
    count = attr.ib(type=int)
    best = attr.ib(type=Graph)
    best_q = attr.ib(type=float)
    runner_up_q = attr.ib(type=float, default=None)
    is_H = attr.ib(type=bool, default=False)  # pylint: disable=invalid-name
    maximizers = attr.ib(type=List[int], converter=tuple, default=())
    escalated = attr.ib(type=bool, default=False)
    q_values = attr.ib(type=List[float], converter=tuple, default=(), eq=False)

    json_exclude = ("q_values",)

    @property
    def tied(self):
        return len(self.maximizers) > 1

    def rows(self):
        """
        One CSV row per class: ``index, n, m, q, is_best``.
        """
        m = 3 * self.n - 6
        return [
            {"index": index, "n": self.n, "m": m, "q": format_float(q), "is_best": index in self.maximizers}
            for index, q in enumerate(self.q_values)
        ]


@attr.s(frozen=True)
class Census(JsonRecordMixin):
    """
    Generated triangulation classes of one order against the known count.

    Attributes:
        n (int): order.
        count (int): number of classes generated.
        expected (int): known number of classes, None when unknown.
        graphs (tuple of Graph): one representative per class, sorted by canonical form.
    """

    n = attr.ib(type=int)
    count = attr.ib(type=int)
    expected = attr.ib(type=int, default=None)
    graphs = attr.ib(type=List[Graph], converter=tuple, default=(), eq=False)

    @property
    def matches(self):
        return self.expected is None or self.count == self.expected

    def to_json_data(self):
        data = super().to_json_data()
        data["matches"] = self.matches
        return data

    def rows(self):
        """
        One CSV row per class: ``index, n, m, degrees`` with the degree sequence in non-increasing order.
        """
        return [
            {
                "index": index,
                "n": graph.n,
                "m": graph.m,
                "degrees": " ".join(str(d) for d in sorted(graph.degrees(), reverse=True)),
            }
            for index, graph in enumerate(self.graphs)
        ]
