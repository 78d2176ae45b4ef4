"""Check a rotation system against a graph by tracing faces."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..bowtie import RotationSystem
from ..graph_core import Graph


@dataclass
class ValidationReport:
    ok: bool
    # set when the rotation system does not list exactly the darts of the graph
    malformed: str | None = None
    face_count: int = 0
    # (V_c, E_c, F_c) per connected component, ordered by smallest vertex
    components: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def euler_deficit(self) -> bool:
        return self.malformed is None and not self.ok


def _components(n: int, edges) -> list[int]:
    root = list(range(n))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for u, v in edges:
        a, b = find(u), find(v)
        if a != b:
            root[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


def trace_faces(rot: RotationSystem) -> list[list[tuple[int, int]]]:
    """Faces as dart cycles; the dart after (x, y) is (y, successor of x around y)."""
    succ = []
    for r in rot.rotations:
        k = len(r)
        succ.append({r[i]: r[(i + 1) % k] for i in range(k)})
    seen = set()
    faces = []
    for x, r in enumerate(rot.rotations):
        for y in r:
            if (x, y) in seen:
                continue
            face = []
            d = (x, y)
            while d not in seen:
                seen.add(d)
                face.append(d)
                a, b = d
                d = (b, succ[b][a])
            faces.append(face)
    return faces


def validate_embedding(g: Graph, rot: RotationSystem) -> ValidationReport:
    if rot.n != g.n:
        return ValidationReport(False, f"rotation system has {rot.n} vertices, graph has {g.n}")
    nbrs: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    for x, r in enumerate(rot.rotations):
        if len(r) != len(set(r)):
            return ValidationReport(False, f"vertex {x} lists a neighbour twice")
        if set(r) != nbrs[x]:
            return ValidationReport(False, f"rotation at vertex {x} does not match its incident edges")

    comp = _components(g.n, g.edges)
    verts: dict[int, int] = {}
    edges: dict[int, int] = {}
    faces: dict[int, int] = {}
    for x in range(g.n):
        verts[comp[x]] = verts.get(comp[x], 0) + 1
    for u, _ in g.edges:
        edges[comp[u]] = edges.get(comp[u], 0) + 1
    traced = trace_faces(rot)
    for face in traced:
        c = comp[face[0][0]]
        faces[c] = faces.get(c, 0) + 1
    rows = []
    ok = True
    for c in sorted(verts):
        # a lone vertex sits in the single face of the sphere
        f = faces.get(c, 1)
        e = edges.get(c, 0)
        rows.append((verts[c], e, f))
        if verts[c] - e + f != 2:
            ok = False
    return ValidationReport(ok, None, len(traced), rows)
