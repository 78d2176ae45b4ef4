"""Left-right planarity test (de Fraysseix–Rosenstiehl criterion, Brandes' formulation).

Works only from the raw edge list. The test phase tracks, for each DFS tree
edge, a stack of conflict pairs of return-edge intervals that must go to
opposite sides; a contradiction means the graph is not planar. No embedding is
produced, so side bookkeeping is skipped.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Optional

from ..graph_core import Graph

Dart = tuple[int, int]


@dataclass(eq=False)
class _Interval:
    low: Optional[Dart] = None
    high: Optional[Dart] = None

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> _Interval:
        return _Interval(self.low, self.high)

    def conflicting(self, b: Dart, lr: _LRState) -> bool:
        return not self.empty() and lr.lowpt[self.high] > lr.lowpt[b]


@dataclass(eq=False)
class _ConflictPair:
    left: _Interval = field(default_factory=_Interval)
    right: _Interval = field(default_factory=_Interval)

    def swap(self) -> None:
        self.left, self.right = self.right, self.left

    def lowest(self, lr: _LRState) -> int:
        if self.left.empty():
            return lr.lowpt[self.right.low]
        if self.right.empty():
            return lr.lowpt[self.left.low]
        return min(lr.lowpt[self.left.low], lr.lowpt[self.right.low])


class _LRState:
    def __init__(self, g: Graph) -> None:
        self.adj = g.adjacency
        self.height: list[Optional[int]] = [None] * g.n
        self.parent_edge: list[Optional[Dart]] = [None] * g.n
        self.out: list[list[int]] = [[] for _ in range(g.n)]
        self.lowpt: dict[Dart, int] = {}
        self.lowpt2: dict[Dart, int] = {}
        self.nesting_depth: dict[Dart, int] = {}
        self.ref: dict[Dart, Optional[Dart]] = {}
        self.lowpt_edge: dict[Dart, Dart] = {}
        self.stack_bottom: dict[Dart, Optional[_ConflictPair]] = {}
        self.S: list[_ConflictPair] = []

    # orientation phase

    def orient(self, v: int) -> None:
        e = self.parent_edge[v]
        for w in self.adj[v]:
            if (v, w) in self.lowpt or (w, v) in self.lowpt:
                continue
            vw = (v, w)
            self.out[v].append(w)
            self.lowpt[vw] = self.height[v]
            self.lowpt2[vw] = self.height[v]
            if self.height[w] is None:
                self.parent_edge[w] = vw
                self.height[w] = self.height[v] + 1
                self.orient(w)
            else:
                self.lowpt[vw] = self.height[w]
            self.nesting_depth[vw] = 2 * self.lowpt[vw]
            if self.lowpt2[vw] < self.height[v]:
                self.nesting_depth[vw] += 1
            if e is not None:
                if self.lowpt[vw] < self.lowpt[e]:
                    self.lowpt2[e] = min(self.lowpt[e], self.lowpt2[vw])
                    self.lowpt[e] = self.lowpt[vw]
                elif self.lowpt[vw] > self.lowpt[e]:
                    self.lowpt2[e] = min(self.lowpt2[e], self.lowpt[vw])
                else:
                    self.lowpt2[e] = min(self.lowpt2[e], self.lowpt2[vw])

    # testing phase

    def top(self) -> Optional[_ConflictPair]:
        return self.S[-1] if self.S else None

    def test(self, v: int) -> bool:
        e = self.parent_edge[v]
        ordered = self.out[v]
        for w in ordered:
            ei = (v, w)
            self.stack_bottom[ei] = self.top()
            if ei == self.parent_edge[w]:
                if not self.test(w):
                    return False
            else:
                self.lowpt_edge[ei] = ei
                self.S.append(_ConflictPair(right=_Interval(ei, ei)))
            if self.lowpt[ei] < self.height[v]:
                if w == ordered[0]:
                    self.lowpt_edge[e] = self.lowpt_edge[ei]
                elif not self.add_constraints(ei, e):
                    return False
        if e is not None:
            self.remove_back_edges(e)
        return True

    def add_constraints(self, ei: Dart, e: Dart) -> bool:
        P = _ConflictPair()
        # merge return edges of ei into P.right
        while True:
            Q = self.S.pop()
            if not Q.left.empty():
                Q.swap()
            if not Q.left.empty():
                return False
            if self.lowpt[Q.right.low] > self.lowpt[e]:
                if P.right.empty():
                    P.right = Q.right.copy()
                else:
                    self.ref[P.right.low] = Q.right.high
                P.right.low = Q.right.low
            else:
                self.ref[Q.right.low] = self.lowpt_edge[e]
            if self.top() is self.stack_bottom[ei]:
                break
        # merge conflicting return edges of earlier siblings into P.left
        while self.S and (self.top().left.conflicting(ei, self) or self.top().right.conflicting(ei, self)):
            Q = self.S.pop()
            if Q.right.conflicting(ei, self):
                Q.swap()
            if Q.right.conflicting(ei, self):
                return False
            self.ref[P.right.low] = Q.right.high
            if Q.right.low is not None:
                P.right.low = Q.right.low
            if P.left.empty():
                P.left = Q.left.copy()
            else:
                self.ref[P.left.low] = Q.left.high
            P.left.low = Q.left.low
        if not (P.left.empty() and P.right.empty()):
            self.S.append(P)
        return True

    def remove_back_edges(self, e: Dart) -> None:
        u = e[0]
        while self.S and self.top().lowest(self) == self.height[u]:
            self.S.pop()
        if self.S:
            P = self.S.pop()
            while P.left.high is not None and P.left.high[1] == u:
                P.left.high = self.ref.get(P.left.high)
            if P.left.high is None and P.left.low is not None:
                self.ref[P.left.low] = P.right.low
                P.left.low = None
            while P.right.high is not None and P.right.high[1] == u:
                P.right.high = self.ref.get(P.right.high)
            if P.right.high is None and P.right.low is not None:
                self.ref[P.right.low] = P.left.low
                P.right.low = None
            self.S.append(P)
        if self.lowpt[e] < self.height[u]:
            top = self.top()
            hl, hr = top.left.high, top.right.high
            if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                self.ref[e] = hl
            else:
                self.ref[e] = hr


def is_planar(g: Graph) -> bool:
    n = g.n
    if n > 2 and g.edge_count > 3 * n - 6:
        return False
    lr = _LRState(g)
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * n + 1000))
    try:
        roots = []
        for v in range(n):
            if lr.height[v] is None:
                lr.height[v] = 0
                roots.append(v)
                lr.orient(v)
        for v in range(n):
            lr.out[v].sort(key=lambda w, v=v: lr.nesting_depth[(v, w)])
        for r in roots:
            if not lr.test(r):
                return False
        return True
    finally:
        sys.setrecursionlimit(old_limit)
