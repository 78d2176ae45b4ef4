"""Audit a decomposition from its raw edge lists and rotations."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..bounds import theta4_lower_bound
from ..decomposer import Decomposition
from ..graph_core import Graph, complete_multipartite, girth
from .embedding import validate_embedding
from .planarity import is_planar

CHECKS = ("partition", "planarity", "girth", "embedding", "count")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class AuditReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def _class_graph(n: int, edges) -> tuple[Graph, list[str]]:
    """Graph on the well-formed, distinct edges of a class, plus what was dropped."""
    problems = []
    kept = set()
    for e in edges:
        if len(e) != 2:
            problems.append(f"malformed edge {list(e)}")
            continue
        u, v = e
        if u == v or not (0 <= u < n and 0 <= v < n):
            problems.append(f"invalid edge {list(e)}")
            continue
        key = (min(u, v), max(u, v))
        if key in kept:
            problems.append(f"edge {list(key)} repeated in one class")
            continue
        kept.add(key)
    return Graph.from_edges(n, kept), problems


def audit_decomposition(d: Decomposition) -> AuditReport:
    # rebuild the target from the spec instead of trusting d.target_graph
    target, _ = complete_multipartite(d.spec)
    n = target.n
    report = AuditReport()

    class_graphs = []
    issues: list[str] = []
    counts: Counter = Counter()
    for i, edges in enumerate(d.classes):
        cg, problems = _class_graph(n, edges)
        class_graphs.append(cg)
        issues += [f"class {i}: {p}" for p in problems]
        for e in edges:
            if len(e) == 2:
                counts[(min(e), max(e))] += 1
    target_edges = set(target.edges)
    extra = sorted(e for e in counts if e not in target_edges)
    missing = sorted(e for e in target_edges if counts[e] == 0)
    repeated = sorted(e for e, c in counts.items() if c > 1)
    if extra:
        issues.append(f"{len(extra)} edge(s) not in the target, e.g. {list(extra[0])}")
    if missing:
        issues.append(f"{len(missing)} target edge(s) uncovered, e.g. {list(missing[0])}")
    if repeated:
        issues.append(f"{len(repeated)} edge(s) used more than once, e.g. {list(repeated[0])}")
    report.checks.append(Check("partition", not issues, "; ".join(issues)))

    nonplanar = [i for i, cg in enumerate(class_graphs) if not is_planar(cg)]
    report.checks.append(Check("planarity", not nonplanar, f"non-planar classes: {nonplanar}" if nonplanar else ""))

    short = [(i, girth(cg)) for i, cg in enumerate(class_graphs)]
    short = [(i, gv) for i, gv in short if gv < 4]
    report.checks.append(
        Check("girth", not short, ", ".join(f"class {i} has girth {gv}" for i, gv in short))
    )

    bad_embed = []
    if len(d.embeddings) != len(d.classes):
        bad_embed.append(f"{len(d.embeddings)} embeddings for {len(d.classes)} classes")
    for i, (cg, rot) in enumerate(zip(class_graphs, d.embeddings)):
        if rot is None:
            bad_embed.append(f"class {i}: no rotation system")
            continue
        vr = validate_embedding(cg, rot)
        if vr.malformed:
            bad_embed.append(f"class {i}: {vr.malformed}")
        elif not vr.ok:
            bad_embed.append(f"class {i}: Euler check fails, (V, E, F) per component {vr.components}")
    report.checks.append(Check("embedding", not bad_embed, "; ".join(bad_embed)))

    bound = theta4_lower_bound(target)
    count_ok = d.claimed_count == len(d.classes) == bound
    report.checks.append(
        Check("count", count_ok, f"claimed {d.claimed_count}, classes {len(d.classes)}, lower bound {bound}")
    )
    return report
