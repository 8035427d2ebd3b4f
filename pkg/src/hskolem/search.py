"""Exhaustive backtracking search for labelings and Skolem-type sequences.

Each engine enumerates in a fixed canonical order:

* nK2 pair systems: pairs are emitted sorted by smaller element (the search
  always extends from the smallest free label, trying differences
  ascending), and solution lists compare lexicographically.
* general graphs: label vectors in lexicographic order.
* sequences: entry tuples in lexicographic order (leftmost empty slot filled
  first, values ascending).

With jobs > 1 the root branching factor is split across worker processes
and the per-root results are merged back in root order, so existence,
counts, the first solution, and enumeration order are identical to serial
execution; only node statistics may differ.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .conditions import nk2_parity_feasible, size_necessary
from .core import (
    HOOK,
    DomainError,
    Graph,
    PairSystem,
    SequenceForm,
    SequenceKind,
    VertexLabeling,
    edge_target_set,
    target_label_set,
)

DEFAULT_NK2_BOUND = 10
DEFAULT_GRAPH_BOUND = 16
DEFAULT_SEQUENCE_BOUND = 12

MODES = ("exists", "first", "count", "enumerate")


class BoundExceeded(DomainError):
    """Input exceeds the exhaustive-search bound; pass force=True to override."""


class ContradictionDetected(RuntimeError):
    """Search found a solution where a necessary condition says none can
    exist; signals an implementation bug."""


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    elapsed: float = 0.0


@dataclass
class SearchOutcome:
    exists: bool
    count: int | None
    solutions: list
    stats: SearchStats


def _stop_for(mode: str, limit: int | None) -> int | None:
    if mode not in MODES:
        raise DomainError(f"mode must be one of {MODES}, got {mode!r}")
    if mode in ("exists", "first"):
        return 1
    if mode == "enumerate":
        return limit
    return None  # count: exhaust


def _outcome(mode: str, sols: list, nodes: int, t0: float, wrap) -> SearchOutcome:
    stats = SearchStats(nodes, time.perf_counter() - t0)
    if mode == "exists":
        return SearchOutcome(bool(sols), None, [], stats)
    if mode == "count":
        return SearchOutcome(bool(sols), len(sols), [], stats)
    return SearchOutcome(bool(sols), None, [wrap(s) for s in sols], stats)


def _merge_roots(results, stop):
    sols: list = []
    nodes = 0
    for part, part_nodes in results:
        nodes += part_nodes
        if stop is None or len(sols) < stop:
            sols.extend(part)
    if stop is not None:
        sols = sols[:stop]
    return sols, nodes


# ---------------------------------------------------------------------------
# nK2: partition {1..2n-1, 2n+1} into pairs with prescribed differences
# ---------------------------------------------------------------------------

def _nk2_rec(avail, top, start, needed, acc, out, stop, prune, counter) -> bool:
    counter[0] += 1
    a = start
    while a <= top and not avail[a]:
        a += 1
    if a > top:
        out.append(tuple(acc))
        return stop is not None and len(out) >= stop
    if prune and needed:
        hi = top
        while not avail[hi]:
            hi -= 1
        if max(needed) > hi - a:
            return False
    avail[a] = False
    done = False
    for diff in sorted(needed):
        b = a + diff
        if b <= top and avail[b]:
            avail[b] = False
            needed.remove(diff)
            acc.append((a, b))
            done = _nk2_rec(avail, top, a + 1, needed, acc, out, stop, prune, counter)
            acc.pop()
            needed.add(diff)
            avail[b] = True
            if done:
                break
    avail[a] = True
    return done


def _nk2_state(n: int, k: int, d: int):
    top = 2 * n + 1
    avail = [False] * (top + 1)
    for v in range(1, 2 * n):
        avail[v] = True
    avail[top] = True
    return avail, top, set(edge_target_set(k, d, n))


def _nk2_solve(args):
    n, k, d, stop, prune, first_diff = args
    avail, top, needed = _nk2_state(n, k, d)
    counter = [0]
    out: list = []
    acc: list = []
    if first_diff is None:
        _nk2_rec(avail, top, 1, needed, acc, out, stop, prune, counter)
    else:
        b = 1 + first_diff
        avail[1] = avail[b] = False
        needed.remove(first_diff)
        acc.append((1, b))
        _nk2_rec(avail, top, 2, needed, acc, out, stop, prune, counter)
    return out, counter[0]


def search_nk2(
    n: int,
    k: int,
    d: int,
    mode: str = "exists",
    limit: int | None = None,
    jobs: int = 1,
    prune: bool = True,
    bound: int = DEFAULT_NK2_BOUND,
    force: bool = False,
) -> SearchOutcome:
    """Exhaustive search for (k,d)-hooked Skolem graceful labelings of nK2."""
    if n < 1 or k < 1 or d < 1:
        raise DomainError("n, k, d must be positive")
    if n > bound and not force:
        raise BoundExceeded(f"n={n} exceeds bound {bound}")
    t0 = time.perf_counter()
    stop = _stop_for(mode, limit)
    if jobs <= 1:
        sols, nodes = _nk2_solve((n, k, d, stop, prune, None))
    else:
        _, top, needed = _nk2_state(n, k, d)
        roots = [diff for diff in sorted(needed)
                 if 1 + diff <= top and 1 + diff != 2 * n]
        tasks = [(n, k, d, stop, prune, diff) for diff in roots]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_nk2_solve, tasks))
        sols, nodes = _merge_roots(results, stop)
    return _outcome(mode, sols, nodes, t0, PairSystem)


# ---------------------------------------------------------------------------
# Skolem-type sequences
# ---------------------------------------------------------------------------

_EMPTY = 0
_HOOK_SLOT = -1


def _seq_rec(seq, length, start, unused, out, stop, prune, counter) -> bool:
    counter[0] += 1
    i = start
    while i < length and seq[i] != _EMPTY:
        i += 1
    if i == length:
        out.append(tuple(HOOK if x == _HOOK_SLOT else x for x in seq))
        return stop is not None and len(out) >= stop
    if prune and unused and max(unused) > length - 1 - i:
        return False
    done = False
    for r in sorted(unused):
        j = i + r
        if j < length and seq[j] == _EMPTY:
            seq[i] = seq[j] = r
            unused.remove(r)
            done = _seq_rec(seq, length, i + 1, unused, out, stop, prune, counter)
            unused.add(r)
            seq[i] = seq[j] = _EMPTY
            if done:
                break
    return done


def _seq_solve(args):
    length, values, hook_index, stop, prune, first_value = args
    seq = [_EMPTY] * length
    if hook_index is not None:
        seq[hook_index] = _HOOK_SLOT
    unused = set(values)
    counter = [0]
    out: list = []
    if first_value is None:
        _seq_rec(seq, length, 0, unused, out, stop, prune, counter)
    else:
        j = first_value  # partner of position 0 (0-based index = value)
        seq[0] = seq[j] = first_value
        unused.remove(first_value)
        _seq_rec(seq, length, 1, unused, out, stop, prune, counter)
    return out, counter[0]


def _search_sequence(
    length, values, hook_index, kind, d, mode, limit, jobs, prune
) -> SearchOutcome:
    t0 = time.perf_counter()
    stop = _stop_for(mode, limit)
    if jobs <= 1:
        sols, nodes = _seq_solve((length, values, hook_index, stop, prune, None))
    else:
        roots = [r for r in sorted(values)
                 if r < length and r != hook_index]
        tasks = [(length, values, hook_index, stop, prune, r) for r in roots]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_seq_solve, tasks))
        sols, nodes = _merge_roots(results, stop)
    return _outcome(mode, sols, nodes, t0,
                    lambda entries: SequenceForm(kind, entries, d=d))


def _check_seq_bound(m: int, bound: int, force: bool):
    if m < 1:
        raise DomainError("order must be positive")
    if m > bound and not force:
        raise BoundExceeded(f"m={m} exceeds bound {bound}")


def search_skolem(
    m: int, mode: str = "exists", limit: int | None = None, jobs: int = 1,
    prune: bool = True, bound: int = DEFAULT_SEQUENCE_BOUND, force: bool = False,
) -> SearchOutcome:
    """Skolem sequences of order m (reversals count as distinct)."""
    _check_seq_bound(m, bound, force)
    return _search_sequence(2 * m, list(range(1, m + 1)), None,
                            SequenceKind.SKOLEM, 1, mode, limit, jobs, prune)


def search_hooked_skolem(
    m: int, mode: str = "exists", limit: int | None = None, jobs: int = 1,
    prune: bool = True, bound: int = DEFAULT_SEQUENCE_BOUND, force: bool = False,
) -> SearchOutcome:
    """Hooked Skolem sequences of order m (hook fixed at position 2m)."""
    _check_seq_bound(m, bound, force)
    return _search_sequence(2 * m + 1, list(range(1, m + 1)), 2 * m - 1,
                            SequenceKind.HOOKED_SKOLEM, 1, mode, limit, jobs, prune)


def search_hooked_sequence(
    d: int, m: int, mode: str = "exists", limit: int | None = None, jobs: int = 1,
    prune: bool = True, bound: int = DEFAULT_SEQUENCE_BOUND, force: bool = False,
) -> SearchOutcome:
    """Hooked sequences with difference set {d, ..., d+m-1}."""
    if d < 1:
        raise DomainError("d must be positive")
    _check_seq_bound(m, bound, force)
    return _search_sequence(2 * m + 1, list(range(d, d + m)), 2 * m - 1,
                            SequenceKind.HOOKED, d, mode, limit, jobs, prune)


# ---------------------------------------------------------------------------
# general graphs
# ---------------------------------------------------------------------------

def _graph_solve(args):
    p, edges, k, d, stop, first_label = args
    labels = sorted(target_label_set(p))
    targets = set(edge_target_set(k, d, len(edges)))
    prev = [[] for _ in range(p)]
    for u, v in edges:  # 1-based in Graph
        hi, lo = max(u, v) - 1, min(u, v) - 1
        prev[hi].append(lo)
    counter = [0]
    out: list = []
    assignment = [0] * p
    used: set = set()
    used_edge: set = set()

    def rec(v):
        counter[0] += 1
        if v == p:
            out.append(tuple(assignment))
            return stop is not None and len(out) >= stop
        done = False
        for lab in labels:
            if lab in used:
                continue
            new_edges = []
            ok = True
            for u in prev[v]:
                e = abs(lab - assignment[u])
                if e not in targets or e in used_edge or e in new_edges:
                    ok = False
                    break
                new_edges.append(e)
            if not ok:
                continue
            assignment[v] = lab
            used.add(lab)
            used_edge.update(new_edges)
            done = rec(v + 1)
            used_edge.difference_update(new_edges)
            used.remove(lab)
            assignment[v] = 0
            if done:
                break
        return done

    if first_label is None:
        rec(0)
    else:
        assignment[0] = first_label
        used.add(first_label)
        rec(1)
    return out, counter[0]


def search_graph(
    g: Graph,
    k: int,
    d: int,
    mode: str = "exists",
    limit: int | None = None,
    jobs: int = 1,
    bound: int = DEFAULT_GRAPH_BOUND,
    force: bool = False,
) -> SearchOutcome:
    """Exhaustive search for (k,d)-hooked Skolem graceful labelings of g."""
    if k < 1 or d < 1:
        raise DomainError("k, d must be positive")
    if g.p > bound and not force:
        raise BoundExceeded(f"p={g.p} exceeds bound {bound}")
    t0 = time.perf_counter()
    if not size_necessary(g.p, g.q):
        return SearchOutcome(False, 0 if mode == "count" else None, [],
                             SearchStats(0, time.perf_counter() - t0))
    stop = _stop_for(mode, limit)
    if jobs <= 1:
        sols, nodes = _graph_solve((g.p, g.edges, k, d, stop, None))
    else:
        roots = sorted(target_label_set(g.p))
        tasks = [(g.p, g.edges, k, d, stop, lab) for lab in roots]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_graph_solve, tasks))
        sols, nodes = _merge_roots(results, stop)
    return _outcome(mode, sols, nodes, t0, VertexLabeling)


# ---------------------------------------------------------------------------
# survey
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SurveyRow:
    n: int
    parity_feasible: bool
    exists: bool | None  # None when the search column was skipped


def survey_nk2(
    ns,
    k: int,
    d: int,
    search_up_to: int = 0,
    jobs: int = 1,
    bound: int = DEFAULT_NK2_BOUND,
    force: bool = False,
) -> list[SurveyRow]:
    """One row per n: the parity predicate and, within search_up_to, the
    exhaustive verdict.  A positive search with a negative predicate is an
    implementation bug and raises ContradictionDetected."""
    rows = []
    for n in ns:
        feasible = nk2_parity_feasible(n, k, d)
        exists = None
        if n <= search_up_to:
            exists = search_nk2(n, k, d, "exists", jobs=jobs,
                                bound=bound, force=force).exists
            if exists and not feasible:
                raise ContradictionDetected(
                    f"search found a labeling for n={n}, k={k}, d={d} "
                    "but the parity predicate rules it out"
                )
        rows.append(SurveyRow(n, feasible, exists))
    return rows
