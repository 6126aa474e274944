"""Built-in cross-validation corpus: solver against the closed-form rules.

Each instance is solved exactly, every rule that knows something about it is
evaluated, and the two are reconciled into a record. Records are plain
dicts so they serialize straight to JSON lines.
"""

from __future__ import annotations

import json
import random
import time
from importlib import resources
from dataclasses import dataclass
from typing import Callable, Optional

from .bounds import BoundResult
from .catalog import connected_graphs, describe, disconnected_graphs_with_edges
from .errors import InconsistencyError
from .graph import (
    CoronaStructure,
    FamilyDescriptor,
    Graph,
    complete_graph,
    family,
    is_connected,
    iterated_corona,
    make_family,
)
from .metric import DistanceMatrix, all_pairs
from .oracle import base_family_dim, corona_rules, graph_dim_rules, reconcile
from .resolver import SolverBudget, SolverResult, is_resolving, metric_dimension_exact
from .trees import prufer_to_tree, random_prufer

AGREE = "AGREE"
ORACLE_SILENT = "ORACLE_SILENT"
MISMATCH = "MISMATCH"

SUITE_NAMES = ("wheels", "fans", "diam2", "cycles", "emptyH", "completeH", "trees", "k1", "bounds")

DEFAULT_SEED = 7


@dataclass(frozen=True)
class Instance:
    id: str
    suite: str
    expression: str
    graph: Graph
    descriptor: Optional[FamilyDescriptor] = None
    # (G, H, k) when the instance is the iterated corona G ⊙^k H
    corona: Optional[tuple[Graph, Graph, int]] = None
    expected: Optional[int] = None


def from_descriptor(
    id: str, suite: str, desc: FamilyDescriptor, expected: Optional[int] = None
) -> Instance:
    corona_parts = None
    if desc.tag == "corona":
        g_desc, h_desc, k = desc.params
        corona_parts = (make_family(g_desc), make_family(h_desc), k)
    return Instance(
        id, suite, str(desc), make_family(desc), desc, corona_parts, expected
    )


def from_corona(
    id: str, suite: str, label: str, g: Graph, h: Graph, k: int, expected: Optional[int] = None
) -> Instance:
    graph, _ = iterated_corona(g, h, k)
    return Instance(id, suite, label, graph, None, (g, h, k), expected)


def edges_label(g: Graph) -> str:
    """Non-grammar label for graphs that have no family expression."""
    body = " ".join(f"{u}-{v}" for u, v in g.edge_list())
    return f"edges(n={g.n}; {body})"


# ---------------------------------------------------------------------------
# Suites

C = family


def _wheels(seed: int) -> list[Instance]:
    expected = (3, 2, 2, 3, 3, 3, 4, 4, 4, 5)
    return [
        from_descriptor(f"wheels/{n:02d}", "wheels", C("wheel", n), expected[n - 3])
        for n in range(3, 13)
    ]


def _fans(seed: int) -> list[Instance]:
    return [from_descriptor(f"fans/{n:02d}", "fans", C("fan", n)) for n in range(1, 13)]


def _diam2(seed: int) -> list[Instance]:
    gs = [C("path", 2), C("path", 3), C("cycle", 3)]
    hs = [C("complete", 2), C("complete", 3), C("path", 3), C("star", 3), C("cycle", 4), C("cycle", 5)]
    out = []
    for g in gs:
        for h in hs:
            out.append(from_descriptor(f"diam2/{len(out):02d}", "diam2", C("corona", g, h)))
    out.append(
        from_descriptor(
            f"diam2/{len(out):02d}", "diam2", C("corona", C("path", 2), C("complete", 2), 2), 6
        )
    )
    return out


def _cycles(seed: int) -> list[Instance]:
    return [
        from_descriptor("cycles/00", "cycles", C("corona", C("path", 2), C("cycle", 7)), 6),
        from_descriptor("cycles/01", "cycles", C("corona", C("path", 2), C("path", 7)), 6),
    ]


def _emptyH(seed: int) -> list[Instance]:
    out = [
        from_descriptor("emptyH/00", "emptyH", C("corona", C("path", 2), C("empty", 2)), 2),
        from_descriptor("emptyH/01", "emptyH", C("corona", C("path", 2), C("empty", 3)), 4),
        from_descriptor("emptyH/02", "emptyH", C("corona", C("path", 3), C("empty", 2)), 3),
    ]
    for n2 in (2, 3, 4):
        for h in disconnected_graphs_with_edges(n2):
            desc = C("corona", C("path", 2), describe(h))
            out.append(from_descriptor(f"emptyH/{len(out):02d}", "emptyH", desc))
    return out


def _completeH(seed: int) -> list[Instance]:
    out = []
    for n2 in (3, 4):
        for h in connected_graphs(n2):
            desc = C("corona", C("path", 2), describe(h))
            out.append(from_descriptor(f"completeH/{len(out):02d}", "completeH", desc))
    return out


def random_trees(seed: int, count: int = 200, orders=(5, 10)) -> list[tuple[list[int], Graph]]:
    rng = random.Random(seed)
    trees = []
    for _ in range(count):
        seq = random_prufer(rng.randint(*orders), rng)
        trees.append((seq, prufer_to_tree(seq)))
    return trees


def _tree_label(seq: list[int]) -> str:
    return f"tree(prufer=[{','.join(map(str, seq))}])"


def _trees(seed: int) -> list[Instance]:
    out = []
    trees = random_trees(seed)
    for i, (seq, t) in enumerate(trees):
        out.append(Instance(f"trees/{i:03d}", "trees", _tree_label(seq), t))
    small = [(seq, t) for seq, t in trees if t.n <= 6][:20]
    k1 = complete_graph(1)
    for i, (seq, t) in enumerate(small):
        label = f"corona({_tree_label(seq)}, complete(1))"
        out.append(from_corona(f"trees/k1-{i:02d}", "trees", label, t, k1, 1))
    out.append(
        from_descriptor("trees/p3-k2", "trees", C("corona", C("path", 3), C("complete", 1), 2), 3)
    )
    return out


def random_connected_graphs(seed: int, count: int = 50, orders=(2, 6)) -> list[Graph]:
    rng = random.Random(seed)
    graphs = []
    while len(graphs) < count:
        n = rng.randint(*orders)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = Graph(n, edges)
        if is_connected(g):
            graphs.append(g)
    return graphs


def _k1(seed: int) -> list[Instance]:
    k1 = complete_graph(1)
    out = []
    for g in random_connected_graphs(seed):
        label = f"corona({edges_label(g)}, complete(1))"
        out.append(from_corona(f"k1/{len(out):02d}", "k1", label, g, k1, 1))
    for n in (3, 4, 5):
        desc = C("corona", C("complete", n), C("complete", 1))
        out.append(from_descriptor(f"k1/complete-{n}", "k1", desc, n - 1))
    return out


def _bounds(seed: int) -> list[Instance]:
    out = []

    def add(desc: FamilyDescriptor) -> None:
        out.append(from_descriptor(f"bounds/{len(out):03d}", "bounds", desc))

    for desc in (
        C("complete_bipartite", 2, 3),
        C("complete_bipartite", 3, 3),
        C("star", 4),
        C("join", C("complete", 2), C("empty", 2)),
        C("join", C("complete", 1), C("union", C("complete", 1), C("complete", 2))),
        C("join", C("complete", 2), C("union", C("complete", 1), C("complete", 2))),
        C("complete", 5),
        C("cycle", 6),
        C("path", 5),
    ):
        add(desc)
    gs = [C("path", 2), C("path", 3), C("cycle", 3), C("path", 4), C("cycle", 4)]
    hs = [C("complete", 1), C("complete", 2)]
    hs += [C("path", n) for n in range(3, 7)]
    hs += [C("cycle", n) for n in range(3, 7)]
    hs += [C("complete", n) for n in range(3, 6)]
    hs += [C("empty", n) for n in range(2, 5)]
    hs += [C("complete_bipartite", 2, 2), C("complete_bipartite", 2, 3), C("star", 4)]
    hs += [C("wheel", 4), C("wheel", 5), C("fan", 4), C("fan", 5)]
    hs += [
        C("union", C("complete", 2), C("empty", 1)),
        C("union", C("path", 3), C("complete", 2)),
        C("union", C("complete", 2), C("empty", 2)),
    ]
    for g in gs:
        for h in hs:
            for k in (1, 2, 3):
                desc = C("corona", g, h, k)
                if desc.order <= 20:
                    add(desc)
    # larger named instances: wheel/fan H of order 8 and a diameter-6+ path
    add(C("corona", C("path", 2), C("wheel", 7)))
    add(C("corona", C("path", 2), C("fan", 7)))
    add(C("corona", C("path", 2), C("path", 8)))
    return out


SUITES: dict[str, Callable[[int], list[Instance]]] = {
    "wheels": _wheels,
    "fans": _fans,
    "diam2": _diam2,
    "cycles": _cycles,
    "emptyH": _emptyH,
    "completeH": _completeH,
    "trees": _trees,
    "k1": _k1,
    "bounds": _bounds,
}


def build_suite(name: str, seed: int = DEFAULT_SEED) -> list[Instance]:
    if name == "all":
        return [inst for suite in SUITE_NAMES for inst in SUITES[suite](seed)]
    try:
        return SUITES[name](seed)
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None


# ---------------------------------------------------------------------------
# Checks on corona instances


def corona_properties(
    instance: Instance, solved: SolverResult, dm: DistanceMatrix
) -> dict[str, bool]:
    """Structural facts every corona G ⊙ H (n1, n2 >= 2, G connected) obeys.

    The last corona level is checked: its spine is G ⊙^(k-1) H. Witness-based
    checks use the solver's minimum witness.
    """
    g, h, k = instance.corona
    if g.n < 2 or h.n < 2 or not is_connected(g):
        return {}
    _, structures = iterated_corona(g, h, k)
    cs: CoronaStructure = structures[-1]
    d = dm.array
    props = {"copy_distance_invariance": _copy_distance_invariance(d, cs)}
    if solved.exact:
        witness = set(solved.witness)
        props["witness_meets_every_copy"] = all(witness & set(c) for c in cs.copies)
        props["stripped_witness_resolves"] = is_resolving(dm, witness - set(cs.spine))
        if is_connected(h):
            h_dm = all_pairs(h)
            # copies are contiguous id blocks laid out exactly like h
            props["copy_restriction_resolves"] = all(
                is_resolving(h_dm, [v - copy[0] for v in witness if copy[0] <= v <= copy[-1]])
                for copy in cs.copies
            )
    return props


def _copy_distance_invariance(d, cs: CoronaStructure) -> bool:
    n = d.shape[0]
    for copy in cs.copies:
        inside = set(copy)
        outside = [x for x in range(n) if x not in inside]
        rows = d[list(copy)][:, outside]
        if not (rows == rows[0]).all():
            return False
    return True


# ---------------------------------------------------------------------------
# Running


def oracle_results(instance: Instance, budget: Optional[SolverBudget] = None) -> list[BoundResult]:
    """All rule evaluations for an instance, silent ones included, deduplicated."""
    results: list[BoundResult] = []
    if instance.descriptor is not None and instance.descriptor.tag in (
        "path", "cycle", "complete", "complete_bipartite", "star", "wheel", "fan"
    ):
        results.append(base_family_dim(instance.descriptor))
    results += graph_dim_rules(instance.graph)
    if instance.corona is not None:
        g, h, k = instance.corona
        results += corona_rules(g, h, k, budget)
    unique = []
    for r in results:
        if r not in unique:
            unique.append(r)
    return unique


def run_instance(
    instance: Instance, budget: Optional[SolverBudget] = None, timings: bool = False
) -> dict:
    start = time.perf_counter()
    graph = instance.graph
    dm = all_pairs(graph)
    solved = metric_dimension_exact(graph, budget, dm=dm)
    results = oracle_results(instance, budget)
    props = corona_properties(instance, solved, dm) if instance.corona else {}

    try:
        verdict_bounds = reconcile([r for r in results if r.applicable], solved)
        consistent = True
    except InconsistencyError:
        verdict_bounds = None
        consistent = False
    expected_ok = instance.expected is None or not solved.exact or solved.value == instance.expected
    if not consistent or not expected_ok or not all(props.values()):
        verdict = MISMATCH
    elif not any(r.applicable for r in results):
        verdict = ORACLE_SILENT
    else:
        verdict = AGREE

    record = {
        "id": instance.id,
        "suite": instance.suite,
        "expression": instance.expression,
        "order": graph.n,
        "size": graph.size,
        "expected": instance.expected,
        "solver": {
            "status": solved.status.value,
            "value": solved.value,
            "lower": solved.lower,
            "upper": solved.upper,
            "witness": list(solved.witness),
            "subsets_checked": solved.subsets_checked,
        },
        "oracle": [r.to_dict() for r in results],
        "reconciled": None
        if verdict_bounds is None
        else {"lower": verdict_bounds.lower, "upper": verdict_bounds.upper, "exact": verdict_bounds.exact},
        "properties": props,
        "verdict": verdict,
    }
    if timings:
        record["duration_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return record


def summarize(records: list[dict]) -> dict[str, int]:
    counts = {AGREE: 0, ORACLE_SILENT: 0, MISMATCH: 0, "BOUNDS_ONLY": 0}
    for rec in records:
        counts[rec["verdict"]] += 1
        if rec["solver"]["status"] != "EXACT":
            counts["BOUNDS_ONLY"] += 1
    counts["total"] = len(records)
    return counts


def report_schema() -> dict:
    """JSON schema that every record produced by ``run_instance`` satisfies."""
    return json.loads(resources.files(__package__).joinpath("report.schema.json").read_text())
