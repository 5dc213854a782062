"""Exact position chromatic numbers and the auxiliary colouring parameters.

The position chromatic number solver iteratively deepens over the colour
count k, running a backtracking partition search at each k.  Classes grow
through :class:`poscol.position.SetState`, whose extension checks are sound
because every position property is closed under subsets.  Symmetry between
colour classes is broken by only letting a vertex open class j when classes
0..j-1 are nonempty.  Budgets make the solver interruptible: partial results
are tagged ``upper_bound_only``, never passed off as exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BudgetExceededError, DEFAULT_LIMITS, GraphInputError, Limits
from .graphs import (
    Graph,
    complement,
    diameter,
    is_diamond_free,
    monophonic_diameter,
)
from .position import (
    ALL_KINDS,
    PositionKind,
    SetState,
    is_position_set,
    position_number,
)


@dataclass(frozen=True)
class Colouring:
    """Total vertex -> class assignment with contiguous nonempty classes."""

    assignment: tuple[int, ...]
    k: int

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out

    @staticmethod
    def from_classes(n: int, classes: Sequence[Iterable[int]]) -> "Colouring":
        assignment = [-1] * n
        for c, cls in enumerate(classes):
            for v in cls:
                if not 0 <= v < n:
                    raise GraphInputError(f"vertex {v} out of range")
                if assignment[v] != -1:
                    raise GraphInputError(f"vertex {v} assigned twice")
                assignment[v] = c
        if any(c == -1 for c in assignment):
            raise GraphInputError("colouring leaves a vertex unassigned")
        if any(not cls for cls in classes):
            raise GraphInputError("empty colour class")
        return Colouring(tuple(assignment), len(classes))


@dataclass(frozen=True)
class CertifiedColouring:
    colouring: Colouring
    kind: PositionKind
    verified: bool
    provenance: str
    optimality: str  # "exact" | "upper_bound_only"

    @property
    def k(self) -> int:
        return self.colouring.k


@dataclass(frozen=True)
class BoundPair:
    lower: int
    upper: int
    lower_reason: str
    upper_reason: str


def verify_colouring(
    g: Graph, c: Colouring, kind: PositionKind, limits: Limits = DEFAULT_LIMITS
) -> bool:
    """True iff every colour class of ``c`` is a ``kind`` position set of ``g``."""
    if len(c.assignment) != g.n:
        raise GraphInputError("colouring does not cover the vertex set")
    seen = [False] * c.k
    for cls in c.assignment:
        if not 0 <= cls < c.k:
            raise GraphInputError(f"class id {cls} outside 0..{c.k - 1}")
        seen[cls] = True
    if not all(seen):
        raise GraphInputError("gap in class ids: some class is empty")
    return all(is_position_set(g, cls, kind, limits) for cls in c.classes())


# -- partition search --------------------------------------------------------


def _order_by_degree(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))


def _feasible_partition(
    g: Graph,
    kind: PositionKind,
    k: int,
    limits: Limits,
    ticker,
    cap: int | None,
) -> Colouring | None:
    """One colouring with at most ``k`` classes, or None if impossible.

    Branches on the unassigned vertex with the fewest feasible classes
    (deterministic tie-break: descending degree then id).  Scanning the
    options doubles as forward checking: a vertex with no feasible class
    fails the node immediately.
    """
    if g.n == 0:
        return Colouring((), 0)
    if k <= 0:
        return None
    if cap is not None and k * cap == g.n:
        return _perfect_packing(g, kind, k, cap, limits, ticker)
    order = _order_by_degree(g)
    states = [SetState(g, kind, limits) for _ in range(k)]
    assignment = [-1] * g.n

    def bt(assigned: int, opened: int) -> bool:
        ticker.tick()
        if assigned == g.n:
            return True
        if cap is not None:
            free = sum(cap - len(s.members) for s in states[:opened])
            if free + (k - opened) * cap < g.n - assigned:
                return False
        limit = min(opened + 1, k)
        best_v = -1
        best_opts: list[int] | None = None
        for v in order:
            if assignment[v] != -1:
                continue
            opts = []
            for c in range(limit):
                st = states[c]
                if st.try_add(v):
                    st.pop()
                    opts.append(c)
                    if best_opts is not None and len(opts) >= len(best_opts):
                        break
            if not opts:
                return False
            if best_opts is None or len(opts) < len(best_opts):
                best_v, best_opts = v, opts
                if len(best_opts) == 1:
                    break
        assert best_opts is not None
        for c in best_opts:
            st = states[c]
            if not st.try_add(best_v):  # pragma: no cover - options were vetted
                continue
            assignment[best_v] = c
            if bt(assigned + 1, max(opened, c + 1)):
                return True
            st.pop()
            assignment[best_v] = -1
        return False

    if not bt(0, 0):
        return None
    used = max(assignment) + 1
    return Colouring(tuple(assignment), used)


def _perfect_packing(
    g: Graph, kind: PositionKind, k: int, cap: int, limits: Limits, ticker
) -> Colouring | None:
    """k classes of exactly ``cap`` vertices each (the tight case k*cap == n).

    Exact-cover style search: the lowest unassigned vertex anchors the next
    class, whose remaining members are chosen in increasing id order, so
    class symmetry disappears entirely.
    """
    n = g.n
    assignment = [-1] * n

    def next_free(start: int = 0) -> int:
        v = start
        while v < n and assignment[v] != -1:
            v += 1
        return v

    def fill(colour: int) -> bool:
        ticker.tick()
        if colour == k:
            return True
        anchor = next_free()
        state = SetState(g, kind, limits)
        state.try_add(anchor)
        assignment[anchor] = colour

        def extend(start: int) -> bool:
            ticker.tick()
            if len(state.members) == cap:
                return fill(colour + 1)
            v = start
            while v < n:
                if assignment[v] == -1 and state.try_add(v):
                    assignment[v] = colour
                    if extend(v + 1):
                        return True
                    state.pop()
                    assignment[v] = -1
                v += 1
            return False

        if extend(anchor + 1):
            return True
        assignment[anchor] = -1
        return False

    if not fill(0):
        return None
    return Colouring(tuple(assignment), k)


def greedy_position_colouring(
    g: Graph, kind: PositionKind, limits: Limits = DEFAULT_LIMITS
) -> Colouring:
    """First-fit colouring in descending-degree order; an upper bound witness."""
    order = _order_by_degree(g)
    states: list[SetState] = []
    assignment = [-1] * g.n
    for v in order:
        for c, st in enumerate(states):
            if st.try_add(v):
                assignment[v] = c
                break
        else:
            st = SetState(g, kind, limits)
            st.try_add(v)
            states.append(st)
            assignment[v] = len(states) - 1
    return Colouring(tuple(assignment), len(states))


def _cheap_lower(g: Graph, kind: PositionKind, limits: Limits) -> tuple[int, str]:
    """Valid lower bounds that do not need the full bounds() machinery."""
    if g.n == 0:
        return 0, "empty graph"
    best, reason = 1, "trivial"
    comp = diameter(g)
    if kind in (PositionKind.GP, PositionKind.GP_I):
        cand = -(-(comp.diam_star + 1) // 2)
        if cand > best:
            best, reason = cand, "diameter"
    if kind in (PositionKind.MONO, PositionKind.MONO_I):
        try:
            cand = -(-(monophonic_diameter(g, limits) + 1) // 2)
        except BudgetExceededError:
            cand = 1
        if cand > best:
            best, reason = cand, "monophonic diameter"
    if kind.independent:
        cand = chromatic_number(g, limits)
        if cand > best:
            best, reason = cand, "chromatic number"
    try:
        pi = position_number(g, kind, limits).value
        cand = -(-g.n // pi)
        if cand > best:
            best, reason = cand, "n over position number"
        g._memo[("pi", kind)] = pi
    except BudgetExceededError:
        pass
    return best, reason


def chromatic_position_number(
    g: Graph, kind: PositionKind, limits: Limits = DEFAULT_LIMITS
) -> CertifiedColouring:
    """Exact chi_kind by iterative deepening from the best lower bound.

    The greedy first-fit colouring supplies the initial upper bound, so a
    feasible colouring always exists at the top of the deepening range; if
    the budget runs out first, the best colouring found so far is returned
    tagged ``upper_bound_only``.
    """
    if g.n == 0:
        return CertifiedColouring(Colouring((), 0), kind, True, "solver", "exact")
    greedy = greedy_position_colouring(g, kind, limits)
    try:
        lower, _ = _cheap_lower(g, kind, limits)
    except BudgetExceededError:
        lower = 1
    cap = g._memo.get(("pi", kind))
    best = greedy
    ticker = limits.ticker()
    exact = True
    for k in range(lower, best.k):
        try:
            found = _feasible_partition(g, kind, k, limits, ticker, cap)
        except BudgetExceededError:
            exact = False
            break
        if found is not None:
            best = found
            break
    if not verify_colouring(g, best, kind, limits):
        raise AssertionError("solver produced an invalid colouring")
    return CertifiedColouring(
        best, kind, True, "solver", "exact" if exact else "upper_bound_only"
    )


def _budgeted_position_number(g: Graph, kind: PositionKind, limits: Limits) -> int | None:
    """The exact position number if a 200k-node search finds it, else None."""
    pi_limits = Limits(
        node_limit=200_000,
        time_limit=limits.time_limit,
        induced_path_steps=limits.induced_path_steps,
    )
    try:
        return position_number(g, kind, pi_limits).value
    except BudgetExceededError:
        return None


def feasible_position_colouring(
    g: Graph, kind: PositionKind, k: int, limits: Limits = DEFAULT_LIMITS
) -> Colouring | None:
    """A verified colouring with at most ``k`` classes, or None if none exists.

    A quick capless search usually settles the question; only when it blows
    its small node budget is the position number computed for its capacity
    prune and the search rerun under the caller's limits.
    """
    cached = g._memo.get(("pi_witness", kind))
    cap = cached.value if cached is not None else None
    quick = Limits(
        node_limit=100_000,
        time_limit=limits.time_limit,
        induced_path_steps=limits.induced_path_steps,
    )
    if limits.node_limit is not None:
        quick.node_limit = min(quick.node_limit, limits.node_limit)
    try:
        found = _feasible_partition(g, kind, k, limits, quick.ticker(), cap)
    except BudgetExceededError:
        if cap is None:
            cap = _budgeted_position_number(g, kind, limits)
        if cap is not None and k * cap < g.n:
            return None
        found = _feasible_partition(g, kind, k, limits, limits.ticker(), cap)
    if found is not None and not verify_colouring(g, found, kind, limits):
        raise AssertionError("solver produced an invalid colouring")
    return found


# -- classic parameters ------------------------------------------------------


def _greedy_clique(g: Graph) -> list[int]:
    clique: list[int] = []
    for v in _order_by_degree(g):
        if all(v in g.adj[u] for u in clique):
            clique.append(v)
    return clique


def chromatic_number_with_colouring(
    g: Graph, limits: Limits = DEFAULT_LIMITS
) -> tuple[int, Colouring]:
    """Exact chromatic number via DSATUR-ordered branch and bound."""
    n = g.n
    if n == 0:
        return 0, Colouring((), 0)
    ticker = limits.ticker()
    adj = g.adj

    # greedy DSATUR upper bound
    assign = [-1] * n
    order_key = lambda v: (len({assign[u] for u in adj[v] if assign[u] != -1}), len(adj[v]), -v)
    for _ in range(n):
        v = max((u for u in range(n) if assign[u] == -1), key=order_key)
        used = {assign[u] for u in adj[v]}
        c = 0
        while c in used:
            c += 1
        assign[v] = c
    ub = max(assign) + 1
    best_assign = list(assign)

    clique = _greedy_clique(g)
    lb = len(clique)
    if lb == ub:
        return ub, _normalise_colouring(best_assign)

    # branch and bound with the clique pre-coloured (sound: colours permute)
    assign = [-1] * n
    for c, v in enumerate(clique):
        assign[v] = c
    best = [ub, best_assign]

    def bt(coloured: int, used: int) -> None:
        ticker.tick()
        if used >= best[0]:
            return
        if coloured == n:
            best[0] = used
            best[1] = list(assign)
            return
        v = max(
            (u for u in range(n) if assign[u] == -1),
            key=lambda u: (len({assign[w] for w in adj[u] if assign[w] != -1}), len(adj[u]), -u),
        )
        nb_colours = {assign[w] for w in adj[v] if assign[w] != -1}
        for c in range(min(used + 1, best[0] - 1)):
            if c in nb_colours:
                continue
            assign[v] = c
            bt(coloured + 1, max(used, c + 1))
            assign[v] = -1
            if best[0] == lb:
                return

    bt(len(clique), len(clique))
    return best[0], _normalise_colouring(best[1])


def _normalise_colouring(assign: list[int]) -> Colouring:
    remap: dict[int, int] = {}
    out = []
    for c in assign:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return Colouring(tuple(out), len(remap))


def chromatic_number(g: Graph, limits: Limits = DEFAULT_LIMITS) -> int:
    key = "chromatic_number"
    if key not in g._memo:
        g._memo[key] = chromatic_number_with_colouring(g, limits)[0]
    return g._memo[key]


def clique_cover(g: Graph, limits: Limits = DEFAULT_LIMITS) -> tuple[int, Colouring]:
    """Minimum partition into cliques: a proper colouring of the complement."""
    k, col = chromatic_number_with_colouring(complement(g), limits)
    return k, col


def clique_cover_number(g: Graph, limits: Limits = DEFAULT_LIMITS) -> int:
    return clique_cover(g, limits)[0]


class _CliqueOrIndependentState:
    """Incremental class that must stay a clique or an independent set."""

    __slots__ = ("g", "members", "_flags")

    def __init__(self, g: Graph):
        self.g = g
        self.members: list[int] = []
        self._flags: list[tuple[bool, bool]] = [(True, True)]

    def try_add(self, v: int) -> bool:
        cl, ind = self._flags[-1]
        nb = self.g.adj[v]
        cl = cl and all(u in nb for u in self.members)
        ind = ind and all(u not in nb for u in self.members)
        if not (cl or ind):
            return False
        self.members.append(v)
        self._flags.append((cl, ind))
        return True

    def pop(self) -> None:
        self.members.pop()
        self._flags.pop()


def cochromatic_number(g: Graph, limits: Limits = DEFAULT_LIMITS) -> int:
    """Smallest k partitioning V into classes each a clique or independent set."""
    if g.n == 0:
        return 0
    order = _order_by_degree(g)
    ticker = limits.ticker()
    for k in range(1, g.n + 1):
        states = [_CliqueOrIndependentState(g) for _ in range(k)]

        def bt(i: int, opened: int) -> bool:
            ticker.tick()
            if i == g.n:
                return True
            for c in range(min(opened + 1, k)):
                if states[c].try_add(order[i]):
                    if bt(i + 1, max(opened, c + 1)):
                        return True
                    states[c].pop()
            return False

        if bt(0, 0):
            return k
    raise AssertionError("unreachable: singletons always work")


def total_dominating_set(g: Graph, limits: Limits = DEFAULT_LIMITS) -> tuple[int, frozenset[int]]:
    """Exact minimum total dominating set by set-cover branch and bound.

    Undefined when any vertex is isolated (its open neighbourhood is empty).
    """
    if any(not g.adj[v] for v in range(g.n)):
        raise GraphInputError("total domination undefined: isolated vertex present")
    if g.n == 0:
        return 0, frozenset()
    ticker = limits.ticker()
    n = g.n
    cover_count = [0] * n  # how many chosen dominators cover each vertex
    chosen: list[int] = []
    best: list[object] = [n + 1, frozenset()]

    def uncovered_hardest() -> int | None:
        worst, worst_options = None, math.inf
        for v in range(n):
            if cover_count[v] == 0:
                options = len(g.adj[v])
                if options < worst_options:
                    worst, worst_options = v, options
        return worst

    def bt() -> None:
        ticker.tick()
        if len(chosen) >= best[0]:
            return
        v = uncovered_hardest()
        if v is None:
            best[0] = len(chosen)
            best[1] = frozenset(chosen)
            return
        # some neighbour of v must be a dominator
        for u in sorted(g.adj[v]):
            chosen.append(u)
            for w in g.adj[u]:
                cover_count[w] += 1
            bt()
            for w in g.adj[u]:
                cover_count[w] -= 1
            chosen.pop()

    bt()
    return int(best[0]), best[1]  # type: ignore[arg-type]


def total_domination_number(g: Graph, limits: Limits = DEFAULT_LIMITS) -> int:
    return total_dominating_set(g, limits)[0]


# -- bounds -------------------------------------------------------------------


def bounds(g: Graph, kind: PositionKind, limits: Limits = DEFAULT_LIMITS) -> BoundPair:
    """Best applicable lower and upper bounds on chi_kind, each annotated.

    Lower bounds: ceil(n/pi); the (monophonic) diameter bound for gp and
    mono kinds; the chromatic number for independent kinds.  Upper bounds:
    n - pi + 1; pairing the leftovers for the non-independent kinds; the
    clique cover number for the non-independent kinds; splitting a longest
    geodesic for independent kinds; total domination for gp on diamond-free
    graphs without isolated vertices.
    """
    n = g.n
    if n == 0:
        return BoundPair(0, 0, "empty graph", "empty graph")
    pi = position_number(g, kind, limits).value
    lower: list[tuple[int, str]] = [(1, "trivial"), (-(-n // pi), "ceil(n/pi)")]
    upper: list[tuple[int, str]] = [(n - pi + 1, "n-pi+1")]
    comp = diameter(g)
    if kind in (PositionKind.GP, PositionKind.GP_I):
        lower.append((-(-(comp.diam_star + 1) // 2), "diameter"))
    if kind in (PositionKind.MONO, PositionKind.MONO_I):
        lower.append(
            (-(-(monophonic_diameter(g, limits) + 1) // 2), "monophonic diameter")
        )
    if kind.independent:
        lower.append((chromatic_number(g, limits), "chromatic number"))
        # splitting a longest geodesic into independent pairs needs diam >= 2
        if comp.diam_star >= 2:
            upper.append((n - (comp.diam_star + 1) // 2, "geodesic split"))
    else:
        upper.append((-(-(n - pi + 2) // 2), "pairing"))
        upper.append((clique_cover_number(g, limits), "clique cover"))
    if kind is PositionKind.GP and is_diamond_free(g) and all(g.adj[v] for v in range(n)):
        upper.append((total_domination_number(g, limits), "total domination"))
    lo = max(lower)
    up = min(upper)
    return BoundPair(lo[0], up[0], lo[1], up[1])


# -- inequality suite ---------------------------------------------------------


@dataclass(frozen=True)
class InequalityRecord:
    name: str
    holds: bool
    detail: str


@dataclass
class InequalityReport:
    records: list[InequalityRecord] = field(default_factory=list)

    def check(self, name: str, holds: bool, detail: str) -> None:
        self.records.append(InequalityRecord(name, holds, detail))

    @property
    def failures(self) -> list[InequalityRecord]:
        return [r for r in self.records if not r.holds]

    @property
    def all_hold(self) -> bool:
        return not self.failures


def check_inequality_suite(g: Graph, limits: Limits = DEFAULT_LIMITS) -> InequalityReport:
    """Evaluate every applicable inequality between the colouring parameters."""
    rep = InequalityReport()
    n = g.n
    chi = {kind: chromatic_position_number(g, kind, limits).k for kind in ALL_KINDS}
    pi = {kind: position_number(g, kind, limits).value for kind in ALL_KINDS}
    K = PositionKind
    chrom = chromatic_number(g, limits)
    theta = clique_cover_number(g, limits)
    comp = diameter(g)
    mdiam = monophonic_diameter(g, limits)

    rep.check(
        "chain mu<=gp<=mono",
        chi[K.MU] <= chi[K.GP] <= chi[K.MONO],
        f"{chi[K.MU]} <= {chi[K.GP]} <= {chi[K.MONO]}",
    )
    rep.check(
        "chain gp<=gpi<=mpi",
        chi[K.GP] <= chi[K.GP_I] <= chi[K.MONO_I],
        f"{chi[K.GP]} <= {chi[K.GP_I]} <= {chi[K.MONO_I]}",
    )
    rep.check(
        "chain mono<=mpi",
        chi[K.MONO] <= chi[K.MONO_I],
        f"{chi[K.MONO]} <= {chi[K.MONO_I]}",
    )
    for kind in (K.MU, K.GP, K.MONO):
        lo = -(-n // pi[kind])
        up = min(n - pi[kind] + 1, -(-(n - pi[kind] + 2) // 2), theta)
        rep.check(
            f"n/pi and size bounds ({kind.value})",
            lo <= chi[kind] <= up,
            f"{lo} <= {chi[kind]} <= {up}",
        )
    for kind in (K.GP_I, K.MONO_I, K.MU_I):
        lo = max(-(-n // pi[kind]), chrom)
        up = n - pi[kind] + 1
        if comp.diam_star >= 2:
            up = min(up, n - (comp.diam_star + 1) // 2)
        rep.check(
            f"independent bounds ({kind.value})",
            lo <= chi[kind] <= up,
            f"{lo} <= {chi[kind]} <= {up}",
        )
    rep.check(
        "gp diameter bound",
        chi[K.GP] >= -(-(comp.diam_star + 1) // 2),
        f"{chi[K.GP]} >= ceil(({comp.diam_star}+1)/2)",
    )
    rep.check(
        "mono monophonic-diameter bound",
        chi[K.MONO] >= -(-(mdiam + 1) // 2),
        f"{chi[K.MONO]} >= ceil(({mdiam}+1)/2)",
    )
    if comp.diam_star <= 3:
        zeta = cochromatic_number(g, limits)
        rep.check(
            "diam<=3: gpi equals chromatic",
            chi[K.GP_I] == chrom,
            f"{chi[K.GP_I]} == {chrom}",
        )
        rep.check(
            "diam<=3: gp,mu below chromatic",
            chi[K.GP] <= chrom and chi[K.MU] <= chrom,
            f"gp {chi[K.GP]}, mu {chi[K.MU]} <= {chrom}",
        )
        rep.check(
            "diam<=3: gp below cochromatic",
            chi[K.GP] <= zeta,
            f"{chi[K.GP]} <= {zeta}",
        )
    if all(g.adj[v] for v in range(n)):
        gamma_t = total_domination_number(g, limits)
        rep.check(
            "mu below total domination",
            chi[K.MU] <= gamma_t,
            f"{chi[K.MU]} <= {gamma_t}",
        )
        if is_diamond_free(g):
            rep.check(
                "diamond-free: gp below total domination",
                chi[K.GP] <= gamma_t,
                f"{chi[K.GP]} <= {gamma_t}",
            )
    gbar = complement(g)
    theta_bar = clique_cover_number(gbar, limits)
    chrom_bar = chromatic_number(gbar, limits)
    for kind in (K.GP, K.MONO):
        chi_bar = chromatic_position_number(gbar, kind, limits).k
        rep.check(
            f"nordhaus-gaddum sum chain ({kind.value})",
            chi[kind] + chi_bar <= theta + theta_bar <= n + 1,
            f"{chi[kind]}+{chi_bar} <= {theta}+{theta_bar} <= {n + 1}",
        )
    if n >= 1:
        # the classical product bound is chi * chi-bar >= n; it implies the
        # 2*sqrt(n) form only once n >= 4 (K2 already violates the latter)
        floor_val = max(n, 2 * math.sqrt(n)) if n >= 4 else n
        for kind in (K.GP_I, K.MONO_I):
            chi_bar = chromatic_position_number(gbar, kind, limits).k
            rep.check(
                f"nordhaus-gaddum product chain ({kind.value})",
                chi[kind] * chi_bar >= chrom * chrom_bar >= floor_val,
                f"{chi[kind]}*{chi_bar} >= {chrom}*{chrom_bar} >= {floor_val:.2f}",
            )
    return rep


# -- JSON ----------------------------------------------------------------------


def colouring_to_dict(c: Colouring, kind: PositionKind | None = None) -> dict:
    out = {
        "n": len(c.assignment),
        "k": c.k,
        "classes": [sorted(cls) for cls in c.classes()],
    }
    if kind is not None:
        out["kind"] = kind.value
    return out


def colouring_from_dict(obj: dict) -> tuple[Colouring, PositionKind | None]:
    try:
        n = int(obj["n"])
        classes = [[int(v) for v in cls] for cls in obj["classes"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphInputError(f"bad colouring JSON: {exc}") from exc
    kind = None
    if "kind" in obj:
        from .position import parse_kind

        kind = parse_kind(str(obj["kind"]))
    return Colouring.from_classes(n, classes), kind
