"""Congruence closure, quotients, and the cancellative reflection.

The closure engine is union-find driven: every merged pair schedules its
translates under addition (and under the scalar action when one is given),
so the final partition is the least congruence containing the seed pairs.
Translating only the merged pair is enough because chains of merges
translate term by term.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotACongruence, NotASubsemimodule
from .structures import (Morphism, SecondAction, Semimodule, Table,
                         build_morphism, build_semimodule, freeze_table,
                         is_cancellative)
from .subsets import Subsemimodule, is_closed_subset, subtractive_closure


@dataclass(frozen=True)
class Congruence:
    """Partition of a carrier, classes numbered by least member."""

    size: int
    class_of: tuple[int, ...]
    class_count: int

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.size, self.class_of))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Congruence({self.size} elements, {self.class_count} classes)"

    @property
    def representatives(self) -> tuple[int, ...]:
        reps = [-1] * self.class_count
        for x in range(self.size - 1, -1, -1):
            reps[self.class_of[x]] = x
        return tuple(reps)

    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.class_count)]
        for x in range(self.size):
            out[self.class_of[x]].append(x)
        return tuple(tuple(c) for c in out)


def _canonical_partition(size: int, find) -> Congruence:
    root_to_class: dict[int, int] = {}
    class_of = [0] * size
    for x in range(size):
        r = find(x)
        if r not in root_to_class:
            root_to_class[r] = len(root_to_class)
        class_of[x] = root_to_class[r]
    return Congruence(size, tuple(class_of), len(root_to_class))


class _LazyRows:
    """Row provider over a callable; used for large synthetic carriers."""

    def __init__(self, fn, size: int):
        self.fn = fn
        self.rows: dict[int, list[int]] = {}
        self.size = size

    def __getitem__(self, i: int):
        row = self.rows.get(i)
        if row is None:
            row = self.rows[i] = self.fn(i)
        return row


def congruence_closure(size: int, add_rows, pairs, action_rows=None) -> Congruence:
    """Least congruence on a commutative monoid containing the given pairs.

    ``add_rows[x]`` must be the row of translates x+c; ``action_rows``,
    when present, gives the scalar translates and makes the result an
    S-congruence.
    """
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = deque((int(a), int(b)) for a, b in pairs)
    while queue:
        a, b = queue.popleft()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        if ra > rb:
            ra, rb = rb, ra
        parent[rb] = ra
        row_a, row_b = add_rows[a], add_rows[b]
        for c in range(size):
            x, y = row_a[c], row_b[c]
            if find(x) != find(y):
                queue.append((x, y))
        if action_rows is not None:
            act_a, act_b = action_rows[a], action_rows[b]
            for s in range(len(act_a)):
                x, y = act_a[s], act_b[s]
                if find(x) != find(y):
                    queue.append((x, y))
    return _canonical_partition(size, find)


def module_congruence_closure(M: Semimodule, pairs) -> Congruence:
    return congruence_closure(M.size, M.add, pairs, M.action)


def monoid_congruence_closure(add: Table, pairs) -> Congruence:
    return congruence_closure(len(add), add, pairs)


def congruence_violations(M: Semimodule, cong: Congruence):
    """First witness that a partition is not an S-congruence, or None."""
    cls = cong.class_of
    for group in cong.classes():
        rep = group[0]
        for b in group[1:]:
            for c in range(M.size):
                if cls[M.add[rep][c]] != cls[M.add[b][c]]:
                    return (rep, b, c, "addition")
            for s in range(M.semiring.size):
                if cls[M.action[rep][s]] != cls[M.action[b][s]]:
                    return (rep, b, s, "action")
            if M.second is not None:
                for t in range(M.second.semiring.size):
                    if cls[M.second.table[rep][t]] != cls[M.second.table[b][t]]:
                        return (rep, b, t, "second action")
    return None


def quotient_by_congruence(M: Semimodule, cong: Congruence,
                           trusted: bool = False) -> tuple[Semimodule, Morphism]:
    """Quotient module and its class projection."""
    if cong.size != M.size:
        raise NotACongruence((cong.size, M.size), "partition has the wrong carrier")
    if not trusted:
        witness = congruence_violations(M, cong)
        if witness is not None:
            raise NotACongruence(witness[:3], witness[3])
    reps = cong.representatives
    cls = cong.class_of
    labels = tuple(f"[{M.labels[r]}]" for r in reps)
    add = freeze_table([[cls[M.add[a][b]] for b in reps] for a in reps])
    action = freeze_table([[cls[M.action[a][s]] for s in range(M.semiring.size)]
                           for a in reps])
    second = None
    if M.second is not None:
        table = freeze_table([[cls[M.second.table[a][t]]
                               for t in range(M.second.semiring.size)] for a in reps])
        second = SecondAction(M.second.semiring, M.second.side, table)
    Q = build_semimodule(M.semiring, M.side, labels, add, cls[M.zero], action, second)
    projection = build_morphism(M, Q, cls)
    return Q, projection


def _partition_from_relation(size: int, related) -> Congruence:
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(size):
        for b in range(a + 1, size):
            if related(a, b):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    return _canonical_partition(size, find)


def sub_congruence(M: Semimodule, L: Subsemimodule) -> Congruence:
    """x ~ y when x + l1 = y + l2 for members l1, l2 of L."""
    if L.parent != M or not is_closed_subset(M, L.members):
        raise NotASubsemimodule("quotient requires a subsemimodule of the parent")
    reach = [frozenset(M.add[x][l] for l in L.members) for x in range(M.size)]
    return _partition_from_relation(M.size, lambda a, b: not reach[a].isdisjoint(reach[b]))


def cancellative_pair_relation(M: Semimodule) -> list[list[bool]]:
    """x ~ y when x + w = y + w for some padding element w."""
    n = M.size
    rel = [[False] * n for _ in range(n)]
    for w in range(n):
        col = [M.add[x][w] for x in range(n)]
        for a in range(n):
            ca = col[a]
            for b in range(a, n):
                if ca == col[b]:
                    rel[a][b] = rel[b][a] = True
    return rel


def cancellative_sub_congruence(M: Semimodule, L: Subsemimodule) -> Congruence:
    """x ~ y when x + l1 + w = y + l2 + w; the quotient is cancellative."""
    if L.parent != M or not is_closed_subset(M, L.members):
        raise NotASubsemimodule("quotient requires a subsemimodule of the parent")
    pad = cancellative_pair_relation(M)
    reach = [frozenset(M.add[x][l] for l in L.members) for x in range(M.size)]

    def related(a: int, b: int) -> bool:
        return any(pad[x][y] for x in reach[a] for y in reach[b])

    return _partition_from_relation(M.size, related)


def quotient_by_sub(M: Semimodule, L: Subsemimodule) -> tuple[Semimodule, Morphism]:
    """Quotient by the congruence induced by a subsemimodule.

    The projection is surjective and uniform, and its kernel is the
    subtractive closure of L; both facts are asserted.
    """
    cong = sub_congruence(M, L)
    Q, pi = quotient_by_congruence(M, cong)
    zero_class = [x for x in range(M.size) if pi.map[x] == Q.zero]
    assert tuple(zero_class) == subtractive_closure(M, L).members, \
        "projection kernel must be the subtractive closure"
    return Q, pi


def quotient_cancellative(M: Semimodule, L: Subsemimodule) -> tuple[Semimodule, Morphism]:
    cong = cancellative_sub_congruence(M, L)
    Q, pi = quotient_by_congruence(M, cong)
    assert is_cancellative(Q)
    return Q, pi


@lru_cache(maxsize=None)
def cancellative_reflection(M: Semimodule) -> tuple[Semimodule, Morphism]:
    """Universal cancellative quotient with its surjection."""
    pad = cancellative_pair_relation(M)
    cong = _partition_from_relation(M.size, lambda a, b: pad[a][b])
    Q, pi = quotient_by_congruence(M, cong)
    assert is_cancellative(Q)
    return Q, pi


def reflection_kernel(M: Semimodule) -> tuple[int, ...]:
    """Elements absorbed by some padding element: x + w = w."""
    out = []
    for x in range(M.size):
        if any(M.add[x][w] == w for w in range(M.size)):
            out.append(x)
    return tuple(out)
