"""Minimum decomposition of K_{2n1,...,2nm} into planar subgraphs of girth >= 4.

Pipeline: halve the parts, split K_{n1,...,nm} into ceil(e/(n-1)) forests,
double every forest with the bowtie product (each doubled forest comes with a
planar embedding), and relabel the doubled vertices so that target part p is
the u-copies followed by the v-copies of source part p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bounds import arboricity_formula
from .bowtie import RotationSystem, bowtie_product, forest_bowtie_embedding
from .forests import decompose_into_forests
from .graph_core import Edge, Graph, MultipartiteSpec, VertexPartition, complete_multipartite


class DecompositionError(RuntimeError):
    """The forest split came back short. Never expected for valid input."""


@dataclass(frozen=True)
class Decomposition:
    spec: MultipartiteSpec
    target_graph: Graph
    target_partition: VertexPartition
    classes: tuple[tuple[Edge, ...], ...]
    embeddings: tuple[RotationSystem | None, ...]
    claimed_count: int

    def to_dict(self) -> dict:
        classes = []
        for edges, rot in zip(self.classes, self.embeddings):
            entry: dict = {"edges": [list(e) for e in edges]}
            if rot is not None:
                entry["rotations"] = [list(r) for r in rot.rotations]
            classes.append(entry)
        return {"spec": list(self.spec.part_sizes), "count": self.claimed_count, "classes": classes}

    @classmethod
    def from_dict(cls, data: dict) -> Decomposition:
        """Load a decomposition without checking it; :func:`audit_decomposition` does that."""
        spec = MultipartiteSpec(tuple(data["spec"]))
        graph, partition = complete_multipartite(spec)
        classes, embeddings = [], []
        for entry in data["classes"]:
            classes.append(tuple(tuple(int(x) for x in e) for e in entry["edges"]))
            rot = entry.get("rotations")
            embeddings.append(None if rot is None else RotationSystem(tuple(tuple(int(y) for y in r) for r in rot)))
        return cls(spec, graph, partition, tuple(classes), tuple(embeddings), int(data["count"]))

    def to_dot(self) -> str:
        palette = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan", "gold", "gray"]
        lines = ["graph decomposition {"]
        for p, part in enumerate(self.target_partition.parts):
            for v in part:
                lines.append(f'  {v} [label="{v}", group={p}];')
        for i, edges in enumerate(self.classes):
            color = palette[i % len(palette)]
            for u, v in edges:
                lines.append(f'  {u} -- {v} [color={color}, label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def halve_spec(spec: MultipartiteSpec | Sequence[int]) -> MultipartiteSpec:
    if not isinstance(spec, MultipartiteSpec):
        spec = MultipartiteSpec(tuple(spec))
    odd = [s for s in spec.part_sizes if s % 2]
    if odd:
        raise ValueError(f"odd part size {odd[0]} in {list(spec.part_sizes)}; every part must be even")
    half = MultipartiteSpec(tuple(s // 2 for s in spec.part_sizes))
    if half.vertex_count < 2:
        raise ValueError(f"spec {list(spec.part_sizes)} is too small; the halved graph needs 2 vertices")
    return half


def theta4_formula(spec: MultipartiteSpec | Sequence[int]) -> int:
    half = halve_spec(spec)
    return arboricity_formula(half.vertex_count, half.edge_count)


def doubled_to_target(half: MultipartiteSpec) -> list[int]:
    """Map bowtie vertex ids (u_i = i, v_i = n + i) to target vertex ids."""
    n = half.vertex_count
    mapping = [0] * (2 * n)
    for off, size in zip(half.offsets(), half.part_sizes):
        for rank in range(size):
            i = off + rank
            mapping[i] = 2 * off + rank
            mapping[n + i] = 2 * off + size + rank
    return mapping


def decompose_even_multipartite(spec: MultipartiteSpec | Sequence[int]) -> Decomposition:
    if not isinstance(spec, MultipartiteSpec):
        spec = MultipartiteSpec(tuple(spec))
    half = halve_spec(spec)
    target, partition = complete_multipartite(spec)
    source, _ = complete_multipartite(half)
    k = arboricity_formula(half.vertex_count, half.edge_count)
    if k == 0:
        return Decomposition(spec, target, partition, (), (), 0)

    forests = decompose_into_forests(source, k)
    if forests is None:
        raise DecompositionError(f"K_{{{half}}} did not split into {k} forests")
    mapping = doubled_to_target(half)
    classes, embeddings = [], []
    for i in range(k):
        forest = forests.class_graph(i)
        doubled, _ = bowtie_product(forest)
        rot = forest_bowtie_embedding(forest).relabel(mapping, target.n)
        classes.append(tuple(sorted((min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) for u, v in doubled.edges)))
        embeddings.append(rot)
    return Decomposition(spec, target, partition, tuple(classes), tuple(embeddings), k)
