"""Decide whether every vertex of a host lies in an induced copy of each pattern.

The copy search is a depth-first assignment of pattern vertices to host
vertices.  Pattern vertices are placed in a fixed order (descending degree,
index as tiebreak), host candidates are tried in ascending index, and a
candidate is rejected as soon as its adjacency to the already-placed
vertices differs from the pattern anywhere: copies are induced, so edges
and non-edges both have to match.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    Graph,
    complement,
    independence_number,
    independent_set_with,
    is_complete_graph,
    is_empty_graph,
    to_graph6,
)


def extend_partial_map(host: Graph, pattern: Graph, pins: dict[int, int]) -> dict[int, int] | None:
    """Complete ``pins`` (pattern vertex -> host vertex) to an induced copy.

    Returns a full role map or None.  With empty pins this searches for any
    induced copy of the pattern; pinning every vertex just validates a map.
    """
    p, h = pattern.order, host.order
    if p < 1:
        raise ValueError("pattern must have at least one vertex")
    if p > h:
        return None
    used = 0
    for q, w in pins.items():
        if not 0 <= q < p:
            raise ValueError(f"pinned pattern vertex {q} outside 0..{p - 1}")
        if not 0 <= w < h:
            raise ValueError(f"pinned host vertex {w} outside 0..{h - 1}")
        if used & (1 << w):
            return None
        used |= 1 << w
        if host.degree(w) < pattern.degree(q):
            return None
        if (h - 1 - host.degree(w)) < (p - 1 - pattern.degree(q)):
            return None
    for (q1, w1), (q2, w2) in combinations(pins.items(), 2):
        if pattern.adjacent(q1, q2) != host.adjacent(w1, w2):
            return None

    order = [q for q in sorted(range(p), key=lambda q: (-pattern.degree(q), q)) if q not in pins]
    assignment = dict(pins)
    host_deg = host.degrees()

    def dfs(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        q = order[i]
        pdeg = pattern.degree(q)
        for w in range(h):
            if used & (1 << w):
                continue
            if host_deg[w] < pdeg or (h - 1 - host_deg[w]) < (p - 1 - pdeg):
                continue
            ok = True
            for q2, w2 in assignment.items():
                if pattern.adjacent(q, q2) != host.adjacent(w, w2):
                    ok = False
                    break
            if not ok:
                continue
            assignment[q] = w
            used |= 1 << w
            if dfs(i + 1):
                return True
            del assignment[q]
            used &= ~(1 << w)
        return False

    return dict(assignment) if dfs(0) else None


def find_induced_copy_containing(host: Graph, pattern: Graph, v: int) -> dict[int, int] | None:
    """Induced copy of the pattern through host vertex v, or None.

    Tries each pattern vertex as the role of v, then extends depth-first.
    The returned role map is deterministic for fixed inputs.
    """
    if not 0 <= v < host.order:
        raise ValueError(f"vertex {v} outside 0..{host.order - 1}")
    if pattern.order >= 1 and is_empty_graph(pattern):
        # edgeless patterns reduce to an independent-set search, which the
        # dedicated branch-and-bound settles orders of magnitude faster
        members = independent_set_with(host, v, pattern.order)
        if members is None:
            return None
        return dict(enumerate(members))
    if pattern.order >= 2 and is_complete_graph(pattern):
        members = independent_set_with(complement(host), v, pattern.order)
        if members is None:
            return None
        return dict(enumerate(members))
    for anchor in range(pattern.order):
        found = extend_partial_map(host, pattern, {anchor: v})
        if found is not None:
            return found
    return None


def has_induced_copy(host: Graph, pattern: Graph) -> bool:
    """Anywhere-in-the-host existence test, cheaper than anchored search."""
    if pattern.order < 1:
        raise ValueError("pattern must have at least one vertex")
    if pattern.order > host.order:
        return False
    if is_empty_graph(pattern):
        return independence_number(host) >= pattern.order
    if is_complete_graph(pattern):
        return independence_number(complement(host)) >= pattern.order
    return extend_partial_map(host, pattern, {}) is not None


@dataclass(frozen=True)
class PatternCoverage:
    pattern_g6: str
    witnesses: dict[int, dict[int, int]]  # host vertex -> role map covering it
    uncovered: tuple[int, ...]


@dataclass(frozen=True)
class FullnessReport:
    host_order: int
    coverages: tuple[PatternCoverage, ...]

    @property
    def verdict(self) -> bool:
        return all(not c.uncovered for c in self.coverages)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "patterns": [
                {
                    "pattern_g6": c.pattern_g6,
                    "uncovered": list(c.uncovered),
                    "witnesses": {
                        str(v): sorted(role_map.values()) for v, role_map in sorted(c.witnesses.items())
                    },
                }
                for c in self.coverages
            ],
        }


def is_full(host: Graph, patterns: list[Graph]) -> FullnessReport:
    """Coverage report: for each pattern, which host vertices lie in an induced copy.

    A found copy covers every host vertex it uses, so later vertices inside
    it are never searched again for that pattern.
    """
    if not patterns:
        raise ValueError("at least one pattern is required")
    coverages = []
    for pattern in patterns:
        witnesses: dict[int, dict[int, int]] = {}
        uncovered = []
        for v in range(host.order):
            if v in witnesses:
                continue
            role_map = find_induced_copy_containing(host, pattern, v)
            if role_map is None:
                uncovered.append(v)
            else:
                for w in role_map.values():
                    witnesses.setdefault(w, role_map)
        coverages.append(PatternCoverage(to_graph6(pattern), witnesses, tuple(uncovered)))
    return FullnessReport(host.order, tuple(coverages))


def recheck_witness(host: Graph, pattern: Graph, role_map: dict[int, int]) -> bool:
    """Independent validation of a role map: total, injective, adjacency-exact."""
    if set(role_map.keys()) != set(range(pattern.order)):
        return False
    images = list(role_map.values())
    if len(set(images)) != len(images):
        return False
    if any(not 0 <= w < host.order for w in images):
        return False
    for q1 in range(pattern.order):
        for q2 in range(q1 + 1, pattern.order):
            if pattern.adjacent(q1, q2) != host.adjacent(role_map[q1], role_map[q2]):
                return False
    return True
