"""Membership, maximality and exact maxima for the six position-set kinds.

A set is in *general position* (gp) when no three of its vertices lie on a
common shortest path, in *monophonic position* (mono) when no three lie on a
common induced path, and is a *mutual-visibility set* (mu) when every pair
inside one component still sees each other along some shortest path whose
interior avoids the set.  The ``_i`` variants additionally require the set to
be independent.  On disconnected graphs a set qualifies exactly when its
restriction to every component does, so pairs and triples spanning components
impose no constraint.

All six properties are closed under taking subsets, which the exact searches
exploit for pruning.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BudgetExceededError, DEFAULT_LIMITS, GraphInputError, Limits
from .graphs import Graph, INF


class PositionKind(enum.Enum):
    GP = "gp"
    MONO = "mono"
    MU = "mu"
    GP_I = "gp_i"
    MONO_I = "mono_i"
    MU_I = "mu_i"

    @property
    def independent(self) -> bool:
        return self.value.endswith("_i")

    @property
    def base(self) -> "PositionKind":
        return PositionKind(self.value[:-2]) if self.independent else self


_KIND_ALIASES = {
    "gp": PositionKind.GP,
    "mono": PositionKind.MONO,
    "mp": PositionKind.MONO,
    "mu": PositionKind.MU,
    "gp_i": PositionKind.GP_I,
    "gpi": PositionKind.GP_I,
    "igp": PositionKind.GP_I,
    "mono_i": PositionKind.MONO_I,
    "monoi": PositionKind.MONO_I,
    "mpi": PositionKind.MONO_I,
    "imp": PositionKind.MONO_I,
    "mu_i": PositionKind.MU_I,
    "mui": PositionKind.MU_I,
}

ALL_KINDS = tuple(PositionKind)


def parse_kind(text: str) -> PositionKind:
    try:
        return _KIND_ALIASES[text.strip().lower()]
    except KeyError:
        raise GraphInputError(f"unknown position kind {text!r}") from None


@dataclass(frozen=True)
class PositionWitness:
    """An exact position number together with one maximum set achieving it."""

    value: int
    witness: frozenset[int]
    kind: PositionKind


# -- elementary oracles ------------------------------------------------------


def exists_induced_path_through(
    g: Graph, u: int, w: int, v: int, limits: Limits = DEFAULT_LIMITS
) -> bool:
    """True iff some induced u-v path of ``g`` contains ``w``.

    Backtracks over induced extensions from ``u``; a branch dies as soon as
    ``v`` or ``w`` becomes adjacent to the path interior, since an induced
    path can never pick such a vertex up later.  Results are memoised on the
    graph (the endpoints are symmetric).
    """
    if len({u, w, v}) != 3:
        raise GraphInputError("u, w, v must be three distinct vertices")
    memo = g._memo.setdefault("induced_through", {})
    key = (min(u, v), w, max(u, v))
    hit = memo.get(key)
    if hit is not None:
        return hit
    dist = g.distance_matrix()
    if dist[u][v] is INF or dist[u][w] is INF:
        memo[key] = False
        return False
    adj = g.adj
    budget = [limits.induced_path_steps]

    def extend(path: list[int], on_path: set[int], banned: set[int]) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceededError("induced path search budget exceeded")
        last = path[-1]
        if v in adj[last] and v not in banned and w in on_path:
            return True
        # prune: once v or w is banned (adjacent to interior) it can never join
        if v in banned or (w not in on_path and w in banned):
            return False
        for x in adj[last]:
            if x in on_path or x in banned or x == v:
                continue
            path.append(x)
            on_path.add(x)
            if extend(path, on_path, banned | (adj[last] - {x})):
                return True
            path.pop()
            on_path.remove(x)
        return False

    found = extend([u], {u}, set())
    memo[key] = found
    return found


def geodesic_avoiding(g: Graph, u: int, v: int, blocked: Iterable[int]) -> bool:
    """True iff some shortest u-v path has its interior disjoint from ``blocked``.

    Walks the geodesic-interval DAG: from ``u`` only distance-decreasing
    steps toward ``v`` are taken, skipping blocked interior vertices.
    """
    blocked = set(blocked) - {u, v}
    dist = g.distance_matrix()
    duv = dist[u][v]
    if duv is INF:
        raise GraphInputError("geodesic_avoiding requires u, v in one component")
    du, dv = dist[u], dist[v]
    frontier = {u}
    for step in range(int(duv)):
        nxt = set()
        for x in frontier:
            for y in g.adj[x]:
                if du[y] == step + 1 and dv[y] == duv - step - 1:
                    if y == v:
                        return True
                    if y not in blocked:
                        nxt.add(y)
        frontier = nxt
        if not frontier:
            return False
    return u == v


def _gp_triple_violation(dist, s: list[int]) -> bool:
    for i, w in enumerate(s):
        dw = dist[w]
        for j, a in enumerate(s):
            if a == w:
                continue
            daw = dw[a]
            if daw is INF:
                continue
            da = dist[a]
            for b in s[j + 1 :]:
                if b == w:
                    continue
                dab = da[b]
                if dab is INF:
                    continue
                if daw + dw[b] == dab:
                    return True
    return False


def is_position_set(
    g: Graph,
    s: Iterable[int],
    kind: PositionKind,
    limits: Limits = DEFAULT_LIMITS,
) -> bool:
    """Decide whether ``s`` has the position property ``kind`` in ``g``."""
    s = sorted(set(s))
    if s and not (0 <= s[0] and s[-1] < g.n):
        raise GraphInputError("set contains out-of-range vertex")
    if kind.independent:
        for i, a in enumerate(s):
            for b in s[i + 1 :]:
                if b in g.adj[a]:
                    return False
    base = kind.base
    if len(s) < 2:
        return True
    dist = g.distance_matrix()
    if base is PositionKind.GP:
        return not _gp_triple_violation(dist, s)
    if base is PositionKind.MONO:
        for i, a in enumerate(s):
            for j in range(i + 1, len(s)):
                b = s[j]
                for w in s:
                    if w == a or w == b:
                        continue
                    if exists_induced_path_through(g, a, w, b, limits):
                        return False
        return True
    # mutual visibility
    for i, a in enumerate(s):
        da = dist[a]
        for b in s[i + 1 :]:
            if da[b] is INF:
                continue
            if not geodesic_avoiding(g, a, b, [x for x in s if x != a and x != b]):
                return False
    return True


# -- incremental class state (shared by the exact searches) ------------------


class SetState:
    """A growing candidate position set with O(additions) feasibility checks.

    Subset-closure makes extension checks sound: when ``v`` joins, only the
    constraints involving ``v`` can fail for gp/mono; for mutual visibility
    the new vertex can also block previously chosen witness geodesics, so
    those pairs (and only those) are re-verified.
    """

    __slots__ = ("g", "kind", "limits", "members", "dist", "_witness", "_undo")

    def __init__(self, g: Graph, kind: PositionKind, limits: Limits = DEFAULT_LIMITS):
        self.g = g
        self.kind = kind
        self.limits = limits
        self.members: list[int] = []
        self.dist = g.distance_matrix()
        # geodesic interior witnesses, mu kinds only: (a, b) -> frozenset
        self._witness: dict[tuple[int, int], frozenset[int]] = {}
        self._undo: list[list[tuple[tuple[int, int], frozenset[int] | None]]] = []

    def __len__(self) -> int:
        return len(self.members)

    def try_add(self, v: int) -> bool:
        """Add ``v`` if the set stays a position set; report success."""
        g, dist, members = self.g, self.dist, self.members
        if self.kind.independent:
            nb = g.adj[v]
            if any(u in nb for u in members):
                return False
        base = self.kind.base
        if base is PositionKind.GP:
            if self._gp_conflict(v):
                return False
            members.append(v)
            return True
        if base is PositionKind.MONO:
            for i, a in enumerate(members):
                for b in members[i + 1 :]:
                    if (
                        exists_induced_path_through(g, a, v, b, self.limits)
                        or exists_induced_path_through(g, v, a, b, self.limits)
                        or exists_induced_path_through(g, v, b, a, self.limits)
                    ):
                        return False
            members.append(v)
            return True
        return self._mu_try_add(v)

    def _gp_conflict(self, v: int) -> bool:
        dist, members = self.dist, self.members
        dv = dist[v]
        for i, a in enumerate(members):
            dva = dv[a]
            da = dist[a]
            for b in members[i + 1 :]:
                dvb = dv[b]
                dab = da[b]
                if dab is not INF and dva + dvb == dab:
                    return True
                if dvb is not INF and dva is not INF:
                    if dva + dab == dvb or dvb + dab == dva:
                        return True
        return False

    def _mu_try_add(self, v: int) -> bool:
        g, dist, members = self.g, self.dist, self.members
        dv = dist[v]
        member_set = set(members)
        log: list[tuple[tuple[int, int], frozenset[int] | None]] = []
        new_wit: dict[tuple[int, int], frozenset[int]] = {}
        for u in members:
            if dv[u] is INF:
                continue
            blocked = member_set - {u}
            interior = _geodesic_witness(g, dist, v, u, blocked)
            if interior is None:
                return False
            new_wit[(v, u) if v < u else (u, v)] = interior
        for pair, interior in self._witness.items():
            if v in interior:
                a, b = pair
                blocked = (member_set | {v}) - {a, b}
                repl = _geodesic_witness(g, dist, a, b, blocked)
                if repl is None:
                    return False
                new_wit[pair] = repl
        for pair, interior in new_wit.items():
            log.append((pair, self._witness.get(pair)))
            self._witness[pair] = interior
        self._undo.append(log)
        members.append(v)
        return True

    def pop(self) -> None:
        """Undo the last successful ``try_add`` (adds and pops must nest LIFO)."""
        self.members.pop()
        if self.kind.base is PositionKind.MU:
            for pair, old in reversed(self._undo.pop()):
                if old is None:
                    del self._witness[pair]
                else:
                    self._witness[pair] = old


def _geodesic_witness(g, dist, u, v, blocked) -> frozenset[int] | None:
    """Interior of one shortest u-v path avoiding ``blocked``, else None."""
    duv = dist[u][v]
    du, dvr = dist[u], dist[v]
    if duv is INF:
        return None
    parents: dict[int, int] = {u: u}
    frontier = [u]
    for step in range(int(duv)):
        nxt = []
        for x in frontier:
            for y in g.adj[x]:
                if du[y] == step + 1 and dvr[y] == duv - step - 1 and y not in parents:
                    if y == v or y not in blocked:
                        parents[y] = x
                        nxt.append(y)
        if v in parents:
            interior = []
            x = parents[v]
            while x != u:
                interior.append(x)
                x = parents[x]
            return frozenset(interior)
        frontier = nxt
        if not frontier:
            return None
    return frozenset() if duv == 0 else None


# -- exact maxima -------------------------------------------------------------


def _search_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))


def position_number(
    g: Graph, kind: PositionKind, limits: Limits = DEFAULT_LIMITS
) -> PositionWitness:
    """Exact maximum size of a ``kind`` position set, with one witness.

    Branch and bound over vertex inclusion in descending-degree order;
    subset closure lets infeasible extensions be filtered permanently.
    The result is cached on the graph.
    """
    cached = g._memo.get(("pi_witness", kind))
    if cached is not None:
        return cached
    order = _search_order(g)
    state = SetState(g, kind, limits)
    ticker = limits.ticker()
    best: list[int] = []

    def search(cands: list[int]) -> None:
        ticker.tick()
        if len(state.members) > len(best):
            best[:] = state.members
        if len(state.members) + len(cands) <= len(best):
            return
        for idx, v in enumerate(cands):
            if len(state.members) + len(cands) - idx <= len(best):
                return
            if state.try_add(v):
                search(cands[idx + 1 :])
                state.pop()

    search(order)
    result = PositionWitness(len(best), frozenset(best), kind)
    g._memo[("pi_witness", kind)] = result
    return result


def position_sets_of_size(
    g: Graph, kind: PositionKind, size: int, limits: Limits = DEFAULT_LIMITS
) -> Iterator[frozenset[int]]:
    """Yield every ``kind`` position set of exactly ``size`` vertices."""
    order = _search_order(g)
    state = SetState(g, kind, limits)
    ticker = limits.ticker()

    def search(cands: list[int]) -> Iterator[frozenset[int]]:
        ticker.tick()
        if len(state.members) == size:
            yield frozenset(state.members)
            return
        need = size - len(state.members)
        for idx, v in enumerate(cands):
            if len(cands) - idx < need:
                return
            if state.try_add(v):
                yield from search(cands[idx + 1 :])
                state.pop()

    yield from search(order)


def is_maximal_position_set(
    g: Graph, s: Iterable[int], kind: PositionKind, limits: Limits = DEFAULT_LIMITS
) -> bool:
    """True iff ``s`` is a ``kind`` position set no single vertex can extend.

    Single-vertex extensions suffice: the properties are subset-closed, so a
    larger superset would extend through one of them.
    """
    s = set(s)
    if not is_position_set(g, s, kind, limits):
        raise GraphInputError("is_maximal_position_set requires a valid position set")
    for v in range(g.n):
        if v in s:
            continue
        if is_position_set(g, s | {v}, kind, limits):
            return False
    return True
