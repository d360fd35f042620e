"""Generic digraph core.

Immutable adjacency-list digraphs plus all distance machinery used by the
step-graph families: BFS distance profiles, diameter, line digraph,
small-instance isomorphism testing, an independent all-pairs distance
oracle, and byte-deterministic DOT / JSON exports.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

ISO_ORDER_CAP = 128
ORACLE_ORDER_CAP = 512


class GraphError(ValueError):
    """Raised for malformed digraphs or out-of-contract arguments."""


@dataclass(frozen=True)
class Digraph:
    """Immutable digraph on vertices 0..order-1 with ordered out-lists.

    Parallel arcs are forbidden; loops are representable but never produced
    by the step-graph families.
    """

    order: int
    out_arcs: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise GraphError(f"order must be positive, got {self.order}")
        if len(self.out_arcs) != self.order:
            raise GraphError(
                f"out_arcs has {len(self.out_arcs)} rows for order {self.order}"
            )
        for u, heads in enumerate(self.out_arcs):
            if len(set(heads)) != len(heads):
                raise GraphError(f"duplicate out-arcs at vertex {u}: {heads}")
            for v in heads:
                if not 0 <= v < self.order:
                    raise GraphError(f"arc {u}->{v} out of range 0..{self.order - 1}")

    @classmethod
    def from_lists(cls, order: int, lists: Sequence[Sequence[int]]) -> "Digraph":
        return cls(order, tuple(tuple(heads) for heads in lists))

    @property
    def arc_count(self) -> int:
        return sum(len(heads) for heads in self.out_arcs)

    def arcs(self) -> Iterator[tuple[int, int]]:
        """Arcs in the fixed order: by tail, then out-list position."""
        for u, heads in enumerate(self.out_arcs):
            for v in heads:
                yield (u, v)

    def in_degrees(self) -> list[int]:
        indeg = [0] * self.order
        for heads in self.out_arcs:
            for v in heads:
                indeg[v] += 1
        return indeg

    def is_regular(self) -> Optional[int]:
        """The common out/in-degree if the digraph is regular, else None."""
        degs = {len(heads) for heads in self.out_arcs}
        if len(degs) != 1:
            return None
        d = degs.pop()
        if any(x != d for x in self.in_degrees()):
            return None
        return d

    def is_directed_cycle(self) -> bool:
        return (
            all(len(heads) == 1 for heads in self.out_arcs)
            and diameter(self) is not None
        )


@dataclass(frozen=True)
class DistanceProfile:
    """Single-source BFS result.

    ``dist`` entries are exact shortest-path lengths, with None marking
    unreachable vertices.  ``farthest`` holds every vertex attaining the
    eccentricity; for the degenerate case where nothing else is reachable
    it is {source} with eccentricity 0.
    """

    source: int
    dist: tuple[Optional[int], ...]
    eccentricity: int
    farthest: frozenset[int]


def _bfs_dist(out_arcs: Sequence[Sequence[int]], n: int, source: int) -> list[int]:
    """Distance vector with -1 for unreachable."""
    dist = [-1] * n
    dist[source] = 0
    queue = deque((source,))
    while queue:
        u = queue.popleft()
        du1 = dist[u] + 1
        for v in out_arcs[u]:
            if dist[v] < 0:
                dist[v] = du1
                queue.append(v)
    return dist


def bfs_profile(g: Digraph, source: int) -> DistanceProfile:
    if not 0 <= source < g.order:
        raise GraphError(f"source {source} out of range for order {g.order}")
    raw = _bfs_dist(g.out_arcs, g.order, source)
    ecc = max(raw)
    if ecc == 0:
        farthest = frozenset((source,))
    else:
        farthest = frozenset(v for v, d in enumerate(raw) if d == ecc)
    dist = tuple(d if d >= 0 else None for d in raw)
    return DistanceProfile(source, dist, ecc, farthest)


def diameter(g: Digraph) -> Optional[int]:
    """Max eccentricity over all sources, or None when not strongly connected."""
    out_arcs = g.out_arcs
    n = g.order
    best = 0
    for source in range(n):
        raw = _bfs_dist(out_arcs, n, source)
        ecc = 0
        for d in raw:
            if d < 0:
                return None
            if d > ecc:
                ecc = d
        if ecc > best:
            best = ecc
    return best


def bounded_diameter(
    g: Digraph, limit: Optional[int] = None
) -> Optional[int]:
    """Diameter, or None when not strongly connected OR exceeding ``limit``.

    The early exit once some eccentricity passes ``limit`` is what makes the
    exhaustive step searches affordable; it never changes which candidates
    attain the running minimum.
    """
    out_arcs = g.out_arcs
    n = g.order
    best = 0
    for source in range(n):
        raw = _bfs_dist(out_arcs, n, source)
        ecc = 0
        for d in raw:
            if d < 0:
                return None
            if d > ecc:
                ecc = d
        if limit is not None and ecc > limit:
            return None
        if ecc > best:
            best = ecc
    return best


def line_digraph(g: Digraph) -> Digraph:
    """Line digraph: one vertex per arc of g, ordered by (tail, out-list position)."""
    if g.arc_count == 0:
        raise GraphError("line digraph of an arcless digraph is undefined")
    offsets = [0] * g.order
    total = 0
    for u in range(g.order):
        offsets[u] = total
        total += len(g.out_arcs[u])
    new_out = []
    for u in range(g.order):
        for v in g.out_arcs[u]:
            new_out.append(tuple(offsets[v] + j for j in range(len(g.out_arcs[v]))))
    return Digraph(total, tuple(new_out))


def all_pairs_oracle(g: Digraph) -> tuple[tuple[Optional[int], ...], ...]:
    """Exact distance matrix by iterated arc relaxation (independent of BFS).

    O(N^3)-ish; capped at order 512.
    """
    n = g.order
    if n > ORACLE_ORDER_CAP:
        raise GraphError(f"order {n} exceeds oracle cap {ORACLE_ORDER_CAP}")
    inf = n  # any finite distance is < n
    arcs = list(g.arcs())
    rows = []
    for i in range(n):
        d = [inf] * n
        d[i] = 0
        changed = True
        while changed:
            changed = False
            for u, v in arcs:
                du = d[u]
                if du + 1 < d[v]:
                    d[v] = du + 1
                    changed = True
        rows.append(tuple(x if x < inf else None for x in d))
    return tuple(rows)


def _vertex_invariants(g: Digraph) -> list[tuple]:
    indeg = g.in_degrees()
    eccs = []
    for v in range(g.order):
        raw = _bfs_dist(g.out_arcs, g.order, v)
        eccs.append(max(raw) if min(raw) >= 0 else -1)
    return [
        (len(g.out_arcs[v]), indeg[v], eccs[v]) for v in range(g.order)
    ]


def are_isomorphic(g1: Digraph, g2: Digraph, cap: int = ISO_ORDER_CAP) -> bool:
    """Backtracking isomorphism test with invariant pruning; orders <= cap."""
    if g1.order > cap or g2.order > cap:
        raise GraphError(f"order exceeds isomorphism cap {cap}")
    if g1.order != g2.order or g1.arc_count != g2.arc_count:
        return False
    inv1 = _vertex_invariants(g1)
    inv2 = _vertex_invariants(g2)
    if Counter(inv1) != Counter(inv2):
        return False

    n = g1.order
    adj1 = [frozenset(h) for h in g1.out_arcs]
    adj2 = [frozenset(h) for h in g2.out_arcs]
    # Most-constrained-first: rarest invariant classes early.
    class_size = Counter(inv1)
    order1 = sorted(range(n), key=lambda v: (class_size[inv1[v]], v))
    cands = {v: [w for w in range(n) if inv2[w] == inv1[v]] for v in order1}

    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        v = order1[idx]
        for w in cands[v]:
            if used[w]:
                continue
            ok = True
            for u, x in mapping.items():
                if ((v in adj1[u]) != (w in adj2[x])) or (
                    (u in adj1[v]) != (x in adj2[w])
                ):
                    ok = False
                    break
            if (v in adj1[v]) != (w in adj2[w]):
                ok = False
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(idx + 1):
                return True
            del mapping[v]
            used[w] = False
        return False

    return extend(0)


def to_dot(g: Digraph) -> str:
    """DOT export; byte-deterministic for a given digraph."""
    lines = ["digraph {"]
    lines.extend(f"  {v};" for v in range(g.order))
    lines.extend(f"  {u} -> {v};" for u, v in g.arcs())
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Digraph) -> str:
    """JSON adjacency export; byte-deterministic for a given digraph."""
    payload = {"order": g.order, "arcs": [list(h) for h in g.out_arcs]}
    return json.dumps(payload, separators=(",", ":")) + "\n"


def from_json(text: str) -> Digraph:
    try:
        payload = json.loads(text)
        order = payload["order"]
        arcs = payload["arcs"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise GraphError(f"malformed digraph JSON: {exc}") from exc
    return Digraph.from_lists(order, arcs)
