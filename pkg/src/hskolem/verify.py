"""Certification of labelings and Skolem-type sequences.

Checks report violations rather than raising; every violated condition is
enumerated (capped) with a stable condition id, so reports are usable as
golden-test text.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import (
    Graph,
    PairSystem,
    SequenceForm,
    SequenceKind,
    ShapeMismatch,
    VertexLabeling,
    VerifyReport,
    edge_target_set,
    induced_edge_labels,
    pair_system_labeling,
    target_label_set,
)

# Stable condition ids used in report text.
VERTEX_LABEL_SET = "vertex_label_set"
EDGE_LABEL_SET = "edge_label_set"
EDGE_LABEL_REPEAT = "edge_label_repeat"
HOOK_POSITION = "hook_position"
MULTIPLICITY = "multiplicity"
DISTANCE = "distance"
SUM_IDENTITY = "sum_identity"

MAX_VIOLATIONS = 32


@dataclass(frozen=True)
class PartitionCensus:
    """Sizes of the odd/even label classes and the edges between them."""

    odd_count: int
    even_count: int
    cross_edges: int


def _report(violations, census=None) -> VerifyReport:
    return VerifyReport(tuple(violations[:MAX_VIOLATIONS]), census)


def partition_census(g: Graph, f: VertexLabeling) -> PartitionCensus:
    if len(f.labels) != g.p:
        raise ShapeMismatch(f"{len(f.labels)} labels for {g.p} vertices")
    odd = sum(1 for x in f.labels if x % 2 == 1)
    cross = sum(
        1 for u, v in g.edges if (f.labels[u - 1] + f.labels[v - 1]) % 2 == 1
    )
    return PartitionCensus(odd, g.p - odd, cross)


def verify_labeling(g: Graph, f: VertexLabeling, k: int, d: int) -> VerifyReport:
    """Certify f as a (k,d)-hooked Skolem graceful labeling of g."""
    if len(f.labels) != g.p:
        raise ShapeMismatch(f"{len(f.labels)} labels for {g.p} vertices")
    violations = []

    target = target_label_set(g.p)
    label_counts = Counter(f.labels)
    for lab, cnt in sorted(label_counts.items()):
        if cnt > 1:
            violations.append(
                (VERTEX_LABEL_SET, f"label {lab} used {cnt} times")
            )
    for lab in sorted(set(f.labels) - target):
        violations.append((VERTEX_LABEL_SET, f"label {lab} not in {{1..{g.p - 1}, {g.p + 1}}}"))
    for lab in sorted(target - set(f.labels)):
        violations.append((VERTEX_LABEL_SET, f"label {lab} missing"))

    edge_labels = induced_edge_labels(g, f)
    targets = set(edge_target_set(k, d, g.q))
    for lab, cnt in sorted(Counter(edge_labels).items()):
        if cnt > 1:
            violations.append((EDGE_LABEL_REPEAT, f"edge label {lab} induced {cnt} times"))
    for lab in sorted(set(edge_labels) - targets):
        violations.append((EDGE_LABEL_SET, f"edge label {lab} outside target progression"))
    for lab in sorted(targets - set(edge_labels)):
        violations.append((EDGE_LABEL_SET, f"edge label {lab} never induced"))

    return _report(violations, partition_census(g, f))


def verify_pair_system(ps: PairSystem, k: int, d: int) -> VerifyReport:
    """Certify a pair system as an nK2 labeling (canonical nK2 reading)."""
    g, f = pair_system_labeling(ps)
    return verify_labeling(g, f, k, d)


def _verify_sequence(s: SequenceForm, values: list[int], hooked: bool) -> VerifyReport:
    violations = []
    length = len(s.entries)
    hooks = s.hook_positions()

    # Hook/shape conditions come first so report text is deterministic.
    if hooked:
        m = length // 2
        if length != 2 * m + 1 or length < 3:
            violations.append((HOOK_POSITION, f"length {length} is not 2m+1"))
        if hooks != [2 * m]:
            violations.append(
                (HOOK_POSITION, f"hook at positions {hooks}, expected [{2 * m}]")
            )
    else:
        if length % 2 != 0:
            violations.append((HOOK_POSITION, f"length {length} is not 2m"))
        if hooks:
            violations.append((HOOK_POSITION, f"unexpected hook at positions {hooks}"))

    pos = s.value_positions()
    wanted = set(values)
    for v in sorted(set(pos) - wanted):
        violations.append((MULTIPLICITY, f"value {v} outside value set"))
    for v in values:
        where = pos.get(v, [])
        if len(where) != 2:
            violations.append((MULTIPLICITY, f"value {v} appears {len(where)} times"))
    for v in values:
        where = pos.get(v, [])
        if len(where) == 2 and where[1] - where[0] != v:
            violations.append(
                (DISTANCE, f"value {v} at positions {where[0]},{where[1]}: "
                           f"distance {where[1] - where[0]}")
            )
    return _report(violations)


def verify_skolem_sequence(s: SequenceForm) -> VerifyReport:
    m = len(s.entries) // 2
    return _verify_sequence(s, list(range(1, m + 1)), hooked=False)


def verify_hooked_skolem_sequence(s: SequenceForm) -> VerifyReport:
    m = len(s.entries) // 2
    return _verify_sequence(s, list(range(1, m + 1)), hooked=True)


def verify_hooked_sequence(s: SequenceForm, d: int) -> VerifyReport:
    m = len(s.entries) // 2
    return _verify_sequence(s, list(range(d, d + m)), hooked=True)


def verify_sequence(s: SequenceForm) -> VerifyReport:
    """Dispatch on the sequence's own kind tag."""
    if s.kind is SequenceKind.SKOLEM:
        return verify_skolem_sequence(s)
    if s.kind is SequenceKind.HOOKED_SKOLEM:
        return verify_hooked_skolem_sequence(s)
    return verify_hooked_sequence(s, s.d)


def check_sum_identity(ps: PairSystem, k: int, d: int) -> VerifyReport:
    """Check the two counting identities any valid nK2 labeling satisfies:
    sum(b-a) = nk + n(n-1)d/2 and sum(a+b) = 2n^2 + n + 1."""
    n = ps.n
    violations = []
    if set(ps.values()) != set(range(1, 2 * n)) | {2 * n + 1}:
        violations.append(
            (VERTEX_LABEL_SET,
             f"pair values are not {{1..{2 * n - 1}, {2 * n + 1}}}; "
             "identity check not meaningful")
        )
    sum_diff = sum(ps.differences())
    expected_diff = n * k + n * (n - 1) * d // 2
    if sum_diff != expected_diff:
        violations.append(
            (SUM_IDENTITY, f"sum of differences {sum_diff} != {expected_diff}")
        )
    sum_all = sum(ps.values())
    expected_all = 2 * n * n + n + 1
    if sum_all != expected_all:
        violations.append(
            (SUM_IDENTITY, f"sum of labels {sum_all} != {expected_all}")
        )
    return _report(violations)
