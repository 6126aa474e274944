"""Closed-form metric dimension values and bounds for corona products.

Every rule checks all of its hypotheses before answering and returns an
INAPPLICABLE result otherwise, so a value is never emitted outside the range
where the underlying statement holds. ``conditions_checked`` lists the guards
that passed, in evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .bounds import BoundKind, BoundResult, exact, inapplicable, lower, upper
from .errors import InconsistencyError
from .graph import (
    FamilyDescriptor,
    Graph,
    complement,
    complete_graph,
    components,
    is_connected,
    join,
)
from .metric import diameter
from .resolver import SolverBudget, SolverResult, metric_dimension_exact
from .trees import is_tree, tree_corona_k1_dim, tree_dim

# ---------------------------------------------------------------------------
# Structural recognition


def is_complete_graph(g: Graph) -> bool:
    return g.n >= 1 and g.size == g.n * (g.n - 1) // 2


def is_empty_graph(g: Graph) -> bool:
    return g.n >= 1 and g.size == 0


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


def is_path_graph(g: Graph) -> bool:
    return (
        g.n >= 1
        and g.size == g.n - 1
        and max(g.degrees(), default=0) <= 2
        and is_connected(g)
    )


def _hub_remainders(g: Graph) -> list[Graph]:
    """g minus v, for every vertex v adjacent to all others."""
    return [
        g.induced(w for w in g.vertices() if w != v)
        for v in g.vertices()
        if g.degree(v) == g.n - 1
    ]


def recognize_wheel(g: Graph) -> Optional[int]:
    """Rim length n when g is the wheel K1 + C_n, else ``None``."""
    if g.n < 4:
        return None
    for rest in _hub_remainders(g):
        if is_cycle_graph(rest):
            return rest.n
    return None


def recognize_fan(g: Graph) -> Optional[int]:
    """Path length n when g is the fan K1 + P_n, else ``None``."""
    if g.n < 2:
        return None
    for rest in _hub_remainders(g):
        if is_path_graph(rest):
            return rest.n
    return None


@dataclass(frozen=True)
class JoinDecomposition:
    factors: tuple[Graph, ...]
    # vertex ids of the input graph making up each factor, ascending
    parts: tuple[tuple[int, ...], ...]

    @property
    def trivial(self) -> bool:
        return len(self.factors) <= 1


def recognize_join_decomposition(g: Graph) -> JoinDecomposition:
    """Split g into join factors: one per component of its complement.

    Factors are ordered by smallest vertex; joining them back in that order
    reproduces g when g's vertices are already grouped factor by factor.
    """
    parts = tuple(tuple(c) for c in components(complement(g)))
    if len(parts) <= 1:
        return JoinDecomposition((g,), parts or ((),))
    return JoinDecomposition(tuple(g.induced(p) for p in parts), parts)


@dataclass(frozen=True)
class DimNMinus2:
    applicable: bool
    matches: bool = False
    family: Optional[str] = None


def _is_k1_plus_complete(g: Graph) -> bool:
    """g is K1 disjoint-union K_t for some t >= 1."""
    comps = components(g)
    if len(comps) != 2:
        return False
    small, big = sorted(comps, key=len)
    return len(small) == 1 and is_complete_graph(g.induced(big))


def recognize_dim_n_minus_2(g: Graph) -> DimNMinus2:
    """Whether g is one of the three families whose dimension is n - 2.

    The families are K_{s,t}, K_s + N_t (t >= 2) and K_s + (K_1 u K_t); all
    are recognized from the join factors of g.
    """
    if g.n < 4 or not is_connected(g):
        return DimNMinus2(applicable=False)
    factors = recognize_join_decomposition(g).factors
    if len(factors) < 2:
        return DimNMinus2(applicable=True)
    big = [f for f in factors if f.n > 1]
    singles = len(factors) - len(big)
    if len(factors) == 2 and all(f.size == 0 for f in factors):
        return DimNMinus2(True, True, "K_{s,t}")
    if len(big) == 1 and singles >= 1:
        if big[0].size == 0:
            return DimNMinus2(True, True, "K_s+N_t")
        if _is_k1_plus_complete(big[0]):
            return DimNMinus2(True, True, "K_s+(K_1+K_t)")
    return DimNMinus2(applicable=True)


# ---------------------------------------------------------------------------
# Dimensions of single graphs


def wheel_dim(n: int) -> BoundResult:
    """Dimension of the wheel with an n-vertex rim."""
    if n < 3:
        raise ValueError(f"wheel rim needs at least 3 vertices, got {n}")
    if n in (3, 6):
        return exact(3, "rem:wheel", ("rim>=3",))
    if n in (4, 5):
        return exact(2, "rem:wheel", ("rim>=3",))
    return exact((2 * n + 2) // 5, "rem:wheel", ("rim>=3",))


def fan_dim(n: int) -> BoundResult:
    """Dimension of the fan K1 + P_n."""
    if n < 1:
        raise ValueError(f"fan path needs at least 1 vertex, got {n}")
    if n == 1:
        value = 1
    elif n in (2, 3):
        value = 2
    elif n == 6:
        value = 3
    else:
        value = (2 * n + 2) // 5
    return exact(value, "rem:fan", ("path>=1",))


def base_family_dim(desc: FamilyDescriptor) -> BoundResult:
    tag, p = desc.tag, desc.params
    if tag == "path":
        return exact(1, "fam:path", ("n>=2",)) if p[0] >= 2 else inapplicable("fam:path")
    if tag == "cycle":
        return exact(2, "fam:cycle", ("n>=3",))
    if tag == "complete":
        if p[0] >= 2:
            return exact(p[0] - 1, "fam:complete", ("n>=2",))
        return inapplicable("fam:complete")
    if tag in ("complete_bipartite", "star"):
        s, t = p if tag == "complete_bipartite" else (1, p[0])
        if s + t >= 4:
            return exact(s + t - 2, "lem:n-2", ("connected", "n>=4", "K_{s,t}"))
        return inapplicable("lem:n-2", ("connected",))
    if tag == "wheel":
        return wheel_dim(p[0])
    if tag == "fan":
        return fan_dim(p[0])
    return inapplicable("fam:base")


def graph_dim_rules(g: Graph) -> list[BoundResult]:
    """Every structural rule that pins down dim(g) for this particular graph."""
    if g.n < 2 or not is_connected(g):
        return []
    results = []
    if is_path_graph(g):
        results.append(exact(1, "fam:path", ("path", "n>=2")))
    if is_cycle_graph(g):
        results.append(exact(2, "fam:cycle", ("cycle",)))
    if is_complete_graph(g):
        results.append(exact(g.n - 1, "fam:complete", ("complete", "n>=2")))
    rim = recognize_wheel(g)
    if rim is not None:
        results.append(wheel_dim(rim))
    path_len = recognize_fan(g)
    if path_len is not None:
        results.append(fan_dim(path_len))
    rec = recognize_dim_n_minus_2(g)
    if rec.matches:
        results.append(exact(g.n - 2, "lem:n-2", ("connected", "n>=4", rec.family)))
    if is_tree(g):
        results.append(tree_dim(g))
    return results


def known_dim(
    g: Graph, budget: Optional[SolverBudget] = None
) -> tuple[Optional[int], Optional[str]]:
    """dim(g) from a structural rule if one fires, else from the solver.

    Returns ``(value, source)``; the source is ``"solver"`` for searched
    values and ``(None, None)`` when g is disconnected, trivial, or the
    search ran out of budget.
    """
    if g.n < 2 or not is_connected(g):
        return None, None
    for result in graph_dim_rules(g):
        if result.kind is BoundKind.EXACT:
            return result.value, result.source
    solved = metric_dimension_exact(g, budget)
    if solved.exact:
        return solved.value, "solver"
    return None, None


# ---------------------------------------------------------------------------
# Corona rules


@dataclass(frozen=True)
class CoronaParams:
    """Everything the corona rules need to know about G, H and k."""

    n1: int
    n2: int
    k: int = 1
    dim_H: Optional[int] = None
    diam_H: Optional[int] = None
    alpha: Optional[int] = None
    beta: Optional[int] = None
    dim_K1_join_H: Optional[int] = None
    g_connected: bool = True
    h_is_cycle: bool = False
    h_is_complete: bool = False
    h_is_empty: bool = False
    h_wheel_or_fan: bool = False
    g_is_tree: bool = False
    sources: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.n1 < 1 or self.n2 < 0 or self.k < 1:
            raise ValueError("corona parameters need n1 >= 1, n2 >= 0, k >= 1")
        if self.alpha is not None and self.beta is not None:
            if self.alpha + self.beta > self.n2 or (self.n2 > 0 and self.alpha + self.beta == 0):
                raise ValueError("alpha/beta inconsistent with the order of H")

    @property
    def h_connected(self) -> bool:
        if self.alpha is None or self.beta is None:
            return self.diam_H is not None
        return self.alpha + self.beta == 1

    @property
    def multiplier(self) -> int:
        """n1 (n2 + 1)^(k-1): the number of copies of H at the last level."""
        return self.n1 * (self.n2 + 1) ** (self.k - 1)


def corona_params(
    g: Graph, h: Graph, k: int = 1, budget: Optional[SolverBudget] = None
) -> CoronaParams:
    """Measure G and H, computing dim(H) and dim(K1 + H) when possible."""
    comps = components(h)
    alpha = sum(1 for c in comps if len(c) > 1)
    beta = sum(1 for c in comps if len(c) == 1)
    sources = {}
    dim_h, sources["dim_H"] = known_dim(h, budget)
    dim_k1 = None
    if h.n >= 1:
        if is_cycle_graph(h):
            dim_k1, sources["dim_K1_join_H"] = wheel_dim(h.n).value, "rem:wheel"
        elif is_path_graph(h):
            dim_k1, sources["dim_K1_join_H"] = fan_dim(h.n).value, "rem:fan"
        else:
            dim_k1, sources["dim_K1_join_H"] = known_dim(join(complete_graph(1), h), budget)
    return CoronaParams(
        n1=g.n,
        n2=h.n,
        k=k,
        dim_H=dim_h,
        diam_H=diameter(h),
        alpha=alpha,
        beta=beta,
        dim_K1_join_H=dim_k1,
        g_connected=is_connected(g),
        h_is_cycle=is_cycle_graph(h),
        h_is_complete=is_complete_graph(h),
        h_is_empty=is_empty_graph(h),
        h_wheel_or_fan=recognize_wheel(h) is not None or recognize_fan(h) is not None,
        g_is_tree=is_tree(g),
        sources=sources,
    )


class _Guards:
    """Collects passed guard names; the first failure makes the rule silent."""

    def __init__(self, source: str):
        self.source = source
        self.passed: list[str] = []

    def __call__(self, name: str, ok: bool) -> bool:
        if ok:
            self.passed.append(name)
        return ok

    def fail(self) -> BoundResult:
        return inapplicable(self.source, self.passed)


def corona_lower(p: CoronaParams) -> BoundResult:
    guard = _Guards("thm:lower")
    if not (
        guard("g_connected", p.g_connected)
        and guard("h_connected", p.h_connected)
        and guard("n1>=2", p.n1 >= 2)
        and guard("n2>=2", p.n2 >= 2)
        and guard("dim_H_known", p.dim_H is not None)
    ):
        return guard.fail()
    return lower(p.multiplier * p.dim_H, guard.source, guard.passed)


def corona_exact_small_diameter(p: CoronaParams) -> BoundResult:
    guard = _Guards("thm:diam2")
    if not (
        guard("g_connected", p.g_connected)
        and guard("n1>=2", p.n1 >= 2)
        and guard("n2>=2", p.n2 >= 2)
        and guard("diam_H<=2", p.diam_H is not None and p.diam_H <= 2)
        and guard("dim_H_known", p.dim_H is not None)
    ):
        return guard.fail()
    return exact(p.multiplier * p.dim_H, guard.source, guard.passed)


def corona_upper_components(p: CoronaParams) -> BoundResult:
    guard = _Guards("thm:alphabeta")
    if not (
        guard("g_connected", p.g_connected)
        and guard("n1>=2", p.n1 >= 2)
        and guard("n2>=2", p.n2 >= 2)
        and guard("alpha_beta_known", p.alpha is not None and p.beta is not None)
    ):
        return guard.fail()
    if p.alpha >= 1 and p.beta >= 1:
        per_copy = p.n2 - p.alpha - 1
    elif p.alpha >= 1:
        per_copy = p.n2 - p.alpha
    else:
        per_copy = p.n2 - 1
    return upper(p.multiplier * per_copy, guard.source, guard.passed)


def corona_exact_empty_H(p: CoronaParams) -> BoundResult:
    guard = _Guards("cor:emptyH")
    if not (
        guard("g_connected", p.g_connected)
        and guard("n1>=2", p.n1 >= 2)
        and guard("n2>=2", p.n2 >= 2)
        and guard("H_empty", p.h_is_empty)
    ):
        return guard.fail()
    return exact(p.multiplier * (p.n2 - 1), guard.source, guard.passed)


def corona_exact_complete_H(p: CoronaParams) -> BoundResult:
    """EXACT when H is complete; otherwise the (n2 - 2) upper bound."""
    guard = _Guards("thm:completeH")
    if not (
        guard("g_connected", p.g_connected)
        and guard("h_connected", p.h_connected)
        and guard("n1>=2", p.n1 >= 2)
        and guard("n2>=3", p.n2 >= 3)
    ):
        return guard.fail()
    if p.h_is_complete:
        return exact(p.multiplier * (p.n2 - 1), guard.source, [*guard.passed, "H_complete"])
    return upper(p.multiplier * (p.n2 - 2), guard.source, [*guard.passed, "H_not_complete"])


def corona_upper_k1_join(p: CoronaParams) -> BoundResult:
    guard = _Guards("thm:k1join-upper")
    if not (
        guard("g_connected", p.g_connected)
        and guard("n1>=2", p.n1 >= 2)
        and guard("n2>=2", p.n2 >= 2)
        and guard("dim_K1_join_H_known", p.dim_K1_join_H is not None)
    ):
        return guard.fail()
    return upper(p.multiplier * p.dim_K1_join_H, guard.source, guard.passed)


def corona_exact_big_diameter_or_cycle(p: CoronaParams) -> BoundResult:
    guard = _Guards("thm:diam6-or-cycle")
    big_diameter = p.diam_H is not None and p.diam_H >= 6
    if not (
        guard("g_connected", p.g_connected)
        and guard("n1>=2", p.n1 >= 2)
        and guard("n2>=7", p.n2 >= 7)
        and guard("diam_H>=6_or_cycle", big_diameter or p.h_is_cycle)
        and guard("dim_K1_join_H_known", p.dim_K1_join_H is not None)
    ):
        return guard.fail()
    return exact(p.multiplier * p.dim_K1_join_H, guard.source, guard.passed)


def corona_wheel_fan(p: CoronaParams) -> BoundResult:
    """Wheels and fans of order n2 >= 8 as H: n1 (n2+1)^(k-1) floor(2 n2 / 5)."""
    guard = _Guards("cor:wheel-fan")
    if not (
        guard("g_connected", p.g_connected)
        and guard("n1>=2", p.n1 >= 2)
        and guard("n2>=8", p.n2 >= 8)
        and guard("H_wheel_or_fan", p.h_wheel_or_fan)
    ):
        return guard.fail()
    return exact(p.multiplier * (2 * p.n2 // 5), guard.source, guard.passed)


def corona_k1_upper(n: int, k: int, g_connected: bool = True) -> BoundResult:
    """Upper bound 2^(k-1) n - 1 for G with k rounds of pendant vertices."""
    guard = _Guards("thm:k1-corona")
    if not (guard("g_connected", g_connected) and guard("n>=2", n >= 2) and guard("k>=1", k >= 1)):
        return guard.fail()
    return upper(2 ** (k - 1) * n - 1, guard.source, guard.passed)


CORONA_RULES = (
    corona_lower,
    corona_exact_small_diameter,
    corona_upper_components,
    corona_exact_empty_H,
    corona_exact_complete_H,
    corona_upper_k1_join,
    corona_exact_big_diameter_or_cycle,
    corona_wheel_fan,
)


def corona_rules(
    g: Graph, h: Graph, k: int = 1, budget: Optional[SolverBudget] = None
) -> list[BoundResult]:
    """Evaluate every corona rule on G ⊙^k H, including the silent ones."""
    p = corona_params(g, h, k, budget)
    results = [rule(p) for rule in CORONA_RULES]
    if h.n == 1:
        results.append(corona_k1_upper(g.n, k, p.g_connected))
        if p.g_is_tree:
            results.append(tree_corona_k1_dim(g, k))
    return results


# ---------------------------------------------------------------------------
# Reconciliation


@dataclass(frozen=True)
class Verdict:
    """Best known interval for a dimension; exact when lower == upper."""

    lower: int
    upper: Optional[int]
    sources: tuple[str, ...]

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None


def reconcile(
    results: Iterable[BoundResult], solver: Optional[SolverResult] = None
) -> Verdict:
    """Combine bounds into the tightest interval.

    Raises InconsistencyError when two EXACT values differ or the best
    lower bound exceeds the best upper bound.
    """
    applicable = [r for r in results if r.applicable]
    if not applicable and solver is None:
        raise ValueError("reconcile needs at least one applicable result")
    exacts = {r.value for r in applicable if r.kind is BoundKind.EXACT}
    lowers = [r.value for r in applicable if r.kind in (BoundKind.EXACT, BoundKind.LOWER)]
    uppers = [r.value for r in applicable if r.kind in (BoundKind.EXACT, BoundKind.UPPER)]
    sources = [r.source for r in applicable]
    if solver is not None:
        if solver.exact:
            exacts.add(solver.value)
        lowers.append(solver.lower)
        uppers.append(solver.upper)
        sources.append("solver")
    if len(exacts) > 1:
        raise InconsistencyError(f"conflicting exact values {sorted(exacts)}")
    lo = max(lowers, default=0)
    hi = min(uppers) if uppers else None
    if hi is not None and lo > hi:
        raise InconsistencyError(f"lower bound {lo} exceeds upper bound {hi}")
    return Verdict(lo, hi, tuple(sorted(set(sources))))
