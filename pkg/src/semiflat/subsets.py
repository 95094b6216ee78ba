"""Subsemimodules: enumeration, generation, subtractive closure, generators."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .config import DEFAULT_BOUNDS
from .errors import NotASubsemimodule, SizeBoundExceeded
from .structures import (Morphism, Semimodule, Table, build_morphism,
                         build_semimodule, freeze_table)


@dataclass(frozen=True)
class Subsemimodule:
    parent: Semimodule
    members: tuple[int, ...]

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.parent, self.members))
            object.__setattr__(self, "_hash", h)
        return h

    def __contains__(self, x: int) -> bool:
        return x in set(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self):
        return f"Subsemimodule({list(self.members)} of {self.parent.size})"

    @property
    def mask(self) -> int:
        m = 0
        for x in self.members:
            m |= 1 << x
        return m


def is_closed_subset(M: Semimodule, members) -> bool:
    s = set(members)
    if M.zero not in s:
        return False
    for a in members:
        row = M.add[a]
        for b in members:
            if row[b] not in s:
                return False
        for t in range(M.semiring.size):
            if M.action[a][t] not in s:
                return False
    return True


def subsemimodule(M: Semimodule, members) -> Subsemimodule:
    members = tuple(sorted(set(int(x) for x in members)))
    if not is_closed_subset(M, members):
        raise NotASubsemimodule(f"{list(members)} is not closed in the parent")
    return Subsemimodule(M, members)


def additive_span(add: Table, zero: int, seed) -> frozenset[int]:
    """Closure of a subset under the monoid addition alone."""
    span = {zero}
    frontier = list(seed)
    span.update(frontier)
    while frontier:
        x = frontier.pop()
        for y in list(span):
            z = add[x][y]
            if z not in span:
                span.add(z)
                frontier.append(z)
    return frozenset(span)


def generated_subsemimodule(M: Semimodule, seed) -> Subsemimodule:
    """Least subsemimodule containing the seed."""
    span = {M.zero}
    frontier = []
    for x in seed:
        if x not in span:
            span.add(x)
            frontier.append(x)
    while frontier:
        x = frontier.pop()
        new = [M.add[x][y] for y in list(span)]
        new.extend(M.action[x][s] for s in range(M.semiring.size))
        if M.second is not None:
            new.extend(M.second.table[x][t] for t in range(M.second.semiring.size))
        for z in new:
            if z not in span:
                span.add(z)
                frontier.append(z)
    return Subsemimodule(M, tuple(sorted(span)))


@lru_cache(maxsize=None)
def enumerate_subsemimodules(M: Semimodule, max_size: int = DEFAULT_BOUNDS.max_subset_module) -> tuple[Subsemimodule, ...]:
    """All subsemimodules, sorted by size then lexicographic member order."""
    if M.size > max_size:
        raise SizeBoundExceeded("subsemimodule enumeration", M.size, max_size)
    found = {generated_subsemimodule(M, ()).members}
    frontier = list(found)
    while frontier:
        base = frontier.pop()
        for x in range(M.size):
            if x in base:
                continue
            bigger = generated_subsemimodule(M, base + (x,)).members
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    ordered = sorted(found, key=lambda ms: (len(ms), ms))
    return tuple(Subsemimodule(M, ms) for ms in ordered)


def subtractive_closure_set(add: Table, zero: int, members) -> tuple[int, ...]:
    """Least fixed point of one-step difference-witness closure."""
    cur = set(members)
    cur.add(zero)
    n = len(add)
    while True:
        nxt = set(cur)
        for x in range(n):
            if x in nxt:
                continue
            row = add[x]
            if any(row[y1] in cur for y1 in cur):
                nxt.add(x)
        if nxt == cur:
            return tuple(sorted(cur))
        cur = nxt


def subtractive_closure(M: Semimodule, Y) -> Subsemimodule:
    """Subtractive closure of a subset; the subset is first completed."""
    if isinstance(Y, Subsemimodule):
        base = Y.members
    else:
        base = generated_subsemimodule(M, Y).members
    closed = subtractive_closure_set(M.add, M.zero, base)
    return subsemimodule(M, closed)


def is_subtractive(M: Semimodule, sub: Subsemimodule) -> bool:
    return subtractive_closure(M, sub).members == sub.members


@lru_cache(maxsize=None)
def uniform_subsemimodules(M: Semimodule) -> tuple[Subsemimodule, ...]:
    """Subsemimodules whose inclusion is a uniform morphism (= subtractive)."""
    return tuple(U for U in enumerate_subsemimodules(M) if is_subtractive(M, U))


def _primary_span(M: Semimodule, seed) -> frozenset[int]:
    span = {M.zero}
    frontier = [x for x in seed if x not in span]
    span.update(frontier)
    while frontier:
        x = frontier.pop()
        new = [M.add[x][y] for y in list(span)]
        new.extend(M.action[x][s] for s in range(M.semiring.size))
        for z in new:
            if z not in span:
                span.add(z)
                frontier.append(z)
    return frozenset(span)


@lru_cache(maxsize=None)
def module_generators(M: Semimodule) -> tuple[int, ...]:
    """Greedy inclusion-minimal generating set, deterministic in index order.

    Spans with the primary action only, so linear maps are determined by
    their values on the result.
    """
    gens: list[int] = []
    span = _primary_span(M, ())
    for x in range(M.size):
        if x not in span:
            gens.append(x)
            span = _primary_span(M, gens)
    return tuple(gens)


minimal_generating_set = module_generators


@lru_cache(maxsize=None)
def module_expressions(M: Semimodule) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Each element as a fixed sum of (generator index, scalar) terms.

    Breadth-first over x -> x + g*s steps, so expressions are shortest and
    deterministic; expressions[zero] is empty.
    """
    gens = module_generators(M)
    exprs: dict[int, tuple[tuple[int, int], ...]] = {M.zero: ()}
    frontier = [M.zero]
    steps = [(gi, s) for gi in range(len(gens)) for s in range(M.semiring.size)]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, s in steps:
                y = M.add[x][M.action[gens[gi]][s]]
                if y not in exprs:
                    exprs[y] = exprs[x] + ((gi, s),)
                    nxt.append(y)
        frontier = nxt
    if len(exprs) != M.size:
        raise NotASubsemimodule("generators do not span the module")
    return tuple(exprs[x] for x in range(M.size))


@lru_cache(maxsize=None)
def additive_generators(M: Semimodule) -> tuple[int, ...]:
    """Greedy minimal generating set of the underlying additive monoid."""
    gens: list[int] = []
    span = additive_span(M.add, M.zero, ())
    for x in range(M.size):
        if x not in span:
            gens.append(x)
            span = additive_span(M.add, M.zero, gens)
    return tuple(gens)


@lru_cache(maxsize=None)
def additive_expressions(M: Semimodule) -> tuple[tuple[int, ...], ...]:
    """Each element as a multiplicity vector over the additive generators."""
    gens = additive_generators(M)
    k = len(gens)
    exprs: dict[int, tuple[int, ...]] = {M.zero: (0,) * k}
    frontier = [M.zero]
    while frontier:
        nxt = []
        for x in frontier:
            vx = exprs[x]
            for gi in range(k):
                y = M.add[x][gens[gi]]
                if y not in exprs:
                    exprs[y] = vx[:gi] + (vx[gi] + 1,) + vx[gi + 1:]
                    nxt.append(y)
        frontier = nxt
    return tuple(exprs[x] for x in range(M.size))


def submodule_of(M: Semimodule, sub: Subsemimodule) -> tuple[Semimodule, Morphism]:
    """The subsemimodule as a module of its own, with its inclusion."""
    members = sub.members
    pos = {x: i for i, x in enumerate(members)}
    labels = tuple(M.labels[x] for x in members)
    add = freeze_table([[pos[M.add[a][b]] for b in members] for a in members])
    action = freeze_table([[pos[M.action[a][s]] for s in range(M.semiring.size)]
                           for a in members])
    second = None
    if M.second is not None:
        from .structures import SecondAction
        table = freeze_table([[pos[M.second.table[a][t]]
                               for t in range(M.second.semiring.size)] for a in members])
        second = SecondAction(M.second.semiring, M.second.side, table)
    module = build_semimodule(M.semiring, M.side, labels, add, pos[M.zero], action, second)
    inclusion = build_morphism(module, M, members)
    return module, inclusion
