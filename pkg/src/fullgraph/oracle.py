"""Exhaustive minimum-order search backed by isomorph-free graph enumeration.

Canonical labeling: iterated neighbour-count refinement plus individualization
with branch and bound; the certificate is the lexicographically least
adjacency-column sequence over the refinement-pruned orderings, and branches
whose partial certificate already exceeds the best are cut, as are target-cell
candidates equivalent to an already-tried one under an automorphism fixing the
current prefix pointwise.

Enumeration: each canonical representative of order n-1 is extended by one
vertex over all neighbourhood subsets; a candidate survives only when its new
vertex sits in the same automorphism orbit as the vertex the canonical
labeling puts last (so exactly one parent class reconstructs each child
class), with certificate deduplication among the survivors of one parent.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .graphs import Graph, empty, from_graph6, relabeled, to_graph6
from .verifier import extend_partial_map, has_induced_copy, is_full

CANONICAL_ORDER_CAP = 16
ENUMERATION_ORDER_CAP = 9
_SEARCH_CHUNK = 512


# -- canonical labeling -------------------------------------------------------


def _refine(rows: tuple[int, ...], partition: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until stable."""
    while True:
        masks = []
        for cell in partition:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new: list[list[int]] = []
        changed = False
        for cell in partition:
            if len(cell) == 1:
                new.append(cell)
                continue
            keyed: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((rows[v] & m).bit_count() for m in masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) == 1:
                new.append(cell)
            else:
                changed = True
                for key in sorted(keyed):
                    new.append(keyed[key])
        if not changed:
            return new
        partition = new


def _canonical_search(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return (labeling, certificate): labeling[i] is the old vertex at position i."""
    n = g.order
    if n == 0:
        return (), ()
    rows = g.rows
    best_cert: list[tuple[int, ...]] = [None]  # type: ignore[list-item]
    best_lab: list[tuple[int, ...]] = [None]   # type: ignore[list-item]

    def walk(partition: list[list[int]]) -> None:
        partition = _refine(rows, partition)
        prefix: list[int] = []
        for cell in partition:
            if len(cell) == 1:
                prefix.append(cell[0])
            else:
                break
        cols = []
        for j, v in enumerate(prefix):
            c = 0
            for i in range(j):
                c |= ((rows[v] >> prefix[i]) & 1) << i
            cols.append(c)
        if best_cert[0] is not None:
            b = best_cert[0]
            for j, c in enumerate(cols):
                if c > b[j]:
                    return
                if c < b[j]:
                    break
        if len(prefix) == n:
            cert = tuple(cols)
            if best_cert[0] is None or cert < best_cert[0]:
                best_cert[0] = cert
                best_lab[0] = tuple(prefix)
            return
        for idx, cell in enumerate(partition):
            if len(cell) > 1:
                break
        prefix_mask = 0
        for v in prefix:
            prefix_mask |= 1 << v
        pins_base = {v: v for v in prefix}
        tried: list[int] = []
        for v in partition[idx]:
            skip = False
            for u in tried:
                if (rows[v] & prefix_mask) != (rows[u] & prefix_mask):
                    continue
                pins = dict(pins_base)
                pins[v] = u
                if extend_partial_map(g, g, pins) is not None:
                    skip = True
                    break
            if skip:
                continue
            rest = [u for u in partition[idx] if u != v]
            child = partition[:idx] + [[v], rest] + partition[idx + 1:]
            walk(child)
            tried.append(v)

    walk([list(range(n))])
    return best_lab[0], best_cert[0]


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    if g.order > CANONICAL_ORDER_CAP:
        raise ValueError(f"canonical labeling capped at order {CANONICAL_ORDER_CAP}")
    return _canonical_search(g)[0]


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: equal for two graphs exactly when they are isomorphic."""
    if g.order > CANONICAL_ORDER_CAP:
        raise ValueError(f"canonical labeling capped at order {CANONICAL_ORDER_CAP}")
    lab, _ = _canonical_search(g)
    return to_graph6(relabeled(g, lab)).encode("ascii")


def canonical_g6(g: Graph) -> str:
    return canonical_form(g).decode("ascii")


# -- isomorph-free enumeration ------------------------------------------------

_REPS: dict[int, list[str]] = {}


def _augmented(parent: Graph, subset: int) -> Graph:
    n = parent.order
    rows = [r | (((subset >> v) & 1) << n) for v, r in enumerate(parent.rows)]
    rows.append(subset)
    return Graph(n + 1, tuple(rows))


def _children(parent_g6: str, z: int) -> Iterator[str]:
    """Accepted one-vertex extensions of one parent representative (z = parent order)."""
    parent = from_graph6(parent_g6)
    seen: set[tuple[int, ...]] = set()
    for subset in range(1 << z):
        child = _augmented(parent, subset)
        lab, cert = _canonical_search(child)
        w = lab[-1]
        if w != z:
            # accept only if the new vertex z could equally have been the
            # canonically-last one: some automorphism must carry z to w
            if child.degree(w) != child.degree(z):
                continue
            if extend_partial_map(child, child, {z: w}) is None:
                continue
        if cert in seen:
            continue
        seen.add(cert)
        yield to_graph6(child)


def _representatives(order: int) -> list[str]:
    if order not in _REPS:
        if order == 1:
            _REPS[1] = [to_graph6(empty(1))]
        else:
            _REPS[order] = [
                g6
                for parent_g6 in _representatives(order - 1)
                for g6 in _children(parent_g6, order - 1)
            ]
    return _REPS[order]


def enumerate_graphs(order: int) -> Iterator[Graph]:
    """One representative per isomorphism class, in a fixed deterministic order.

    The largest supported order streams parent by parent, so consumers that
    stop early (the minimum search, typically) never pay for the full level;
    a fully consumed stream is memoized like the smaller orders.
    """
    if not 1 <= order <= ENUMERATION_ORDER_CAP:
        raise ValueError(f"enumeration supports orders 1..{ENUMERATION_ORDER_CAP}")
    if order in _REPS or order < ENUMERATION_ORDER_CAP:
        for g6 in _representatives(order):
            yield from_graph6(g6)
        return
    collected = []
    for parent_g6 in _representatives(order - 1):
        for g6 in _children(parent_g6, order - 1):
            collected.append(g6)
            yield from_graph6(g6)
    _REPS[order] = collected


# -- exact minimum search -----------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    patterns: tuple[str, ...]          # canonical graph6 of each pattern, sorted
    f: int | None
    witness: str | None                # graph6 of a minimum-order example
    exhausted_orders: tuple[int, ...]  # orders fully scanned without a hit
    examined: dict[int, int]           # order -> graphs examined
    exhaustive: bool
    note: str = ""
    wall_time: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        return {
            "patterns": list(self.patterns),
            "f": self.f,
            "witness": self.witness,
            "exhausted_orders": list(self.exhausted_orders),
            "examined": {str(k): v for k, v in sorted(self.examined.items())},
            "exhaustive": self.exhaustive,
            "note": self.note,
            "wall_time": self.wall_time,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SearchResult":
        return cls(
            patterns=tuple(data["patterns"]),
            f=data["f"],
            witness=data["witness"],
            exhausted_orders=tuple(data["exhausted_orders"]),
            examined={int(k): v for k, v in data["examined"].items()},
            exhaustive=data["exhaustive"],
            note=data.get("note", ""),
            wall_time=data.get("wall_time", 0.0),
        )


def resolve_cache_dir(explicit: str | Path | None = None) -> Path:
    """Cache directory: explicit argument, then FULLGRAPH_CACHE, then a user default."""
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get("FULLGRAPH_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "fullgraph"


def _cache_file(cache_dir: Path) -> Path:
    return cache_dir / "f_exact.jsonl"

def _cache_lookup(cache_dir: Path, key: str) -> SearchResult | None:
    path = _cache_file(cache_dir)
    if not path.exists():
        return None
    hit = None
    for line in path.read_text().splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError:
            continue
        if record.get("key") == key:
            hit = record  # append-only file: the last record wins
    return SearchResult.from_dict(hit["result"]) if hit else None


def _cache_store(cache_dir: Path, key: str, result: SearchResult) -> None:
    cache_dir.mkdir(parents=True, exist_ok=True)
    with _cache_file(cache_dir).open("a") as fh:
        fh.write(json.dumps({"key": key, "result": result.to_dict()}, sort_keys=True) + "\n")


def _chunks(it: Iterator[Graph], size: int) -> Iterator[list[Graph]]:
    chunk: list[Graph] = []
    for g in it:
        chunk.append(g)
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def f_exact(
    patterns: list[Graph],
    lower_hint: int | None = None,
    upper_hint: int | None = None,
    cache_dir: str | Path | None = None,
) -> SearchResult:
    """Least order of a graph whose every vertex lies in an induced copy of each pattern.

    Scans orders from max(lower_hint, largest pattern order) upward through
    isomorphism-class representatives.  Hosts lacking even one copy of some
    pattern are skipped before the per-vertex check.  The scan is chunked;
    within the first chunk containing witnesses the lexicographically least
    graph6 string wins, which keeps the result independent of how chunks
    are processed.  Orders above 9 cannot be enumerated: a search asked to
    go beyond returns a non-exhaustive result rather than a certificate.
    """
    if not patterns:
        raise ValueError("at least one pattern is required")
    for p in patterns:
        if p.order < 1:
            raise ValueError("patterns must have at least one vertex")
    hi = ENUMERATION_ORDER_CAP if upper_hint is None else upper_hint
    lo = max(p.order for p in patterns)
    if lower_hint is not None:
        lo = max(lo, lower_hint)
    if lo > hi:
        raise ValueError(f"inconsistent hints: search would start at {lo} but stop at {hi}")

    canon = tuple(sorted(canonical_g6(p) for p in patterns))
    key = json.dumps({"patterns": list(canon), "lo": lo, "hi": hi}, sort_keys=True)
    cdir = resolve_cache_dir(cache_dir)
    cached = _cache_lookup(cdir, key)
    if cached is not None:
        return cached

    t0 = time.perf_counter()
    examined: dict[int, int] = {}
    exhausted: list[int] = []
    f_value: int | None = None
    witness: str | None = None
    for order in range(lo, min(hi, ENUMERATION_ORDER_CAP) + 1):
        count = 0
        for chunk in _chunks(enumerate_graphs(order), _SEARCH_CHUNK):
            hits = []
            for g in chunk:
                count += 1
                if any(not has_induced_copy(g, p) for p in patterns):
                    continue
                if is_full(g, patterns).verdict:
                    hits.append(to_graph6(g))
            if hits:
                f_value = order
                witness = min(hits)
                break
        examined[order] = count
        if f_value is not None:
            break
        exhausted.append(order)

    if f_value is not None:
        exhaustive = True
        note = ""
    elif hi > ENUMERATION_ORDER_CAP:
        exhaustive = False
        note = (f"orders {ENUMERATION_ORDER_CAP + 1}..{hi} not examined: "
                f"enumeration is capped at order {ENUMERATION_ORDER_CAP}")
    else:
        exhaustive = True
        note = f"no qualifying graph up to order {hi}"

    result = SearchResult(
        patterns=canon,
        f=f_value,
        witness=witness,
        exhausted_orders=tuple(exhausted),
        examined=examined,
        exhaustive=exhaustive,
        note=note,
        wall_time=time.perf_counter() - t0,
    )
    _cache_store(cdir, key, result)
    return result
