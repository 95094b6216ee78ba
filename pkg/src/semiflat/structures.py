"""Finite semirings, semimodules and linear maps as explicit index tables.

Carriers are index sets 0..n-1 with row-major operation tables, so every
axiom and every predicate in the workbench is decided by exhaustive scan.
Structures are immutable and hashable; all derived computations are pure
functions of their inputs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import AxiomViolation, MalformedTable, SideMismatch

Table = tuple[tuple[int, ...], ...]

LEFT = "left"
RIGHT = "right"


def freeze_table(rows) -> Table:
    return tuple(tuple(int(x) for x in row) for row in rows)


def check_table(table: Table, nrows: int, ncols: int, what: str) -> None:
    if len(table) != nrows:
        raise MalformedTable(f"{what}: expected {nrows} rows, got {len(table)}")
    for i, row in enumerate(table):
        if len(row) != ncols:
            raise MalformedTable(f"{what}: row {i} has {len(row)} entries, expected {ncols}")


def check_entries(table: Table, carrier: int, what: str) -> None:
    for i, row in enumerate(table):
        for j, x in enumerate(row):
            if not 0 <= x < carrier:
                raise MalformedTable(f"{what}[{i}][{j}] = {x} out of range 0..{carrier - 1}")


@dataclass(frozen=True)
class Violation:
    """A violated axiom together with the witnessing element tuple."""

    axiom: str
    witness: tuple[int, ...]
    detail: str = ""


def commutative_monoid_violations(add: Table, zero: int, prefix: str = "add") -> list[Violation]:
    n = len(add)
    out = []
    for a in range(n):
        if add[zero][a] != a:
            out.append(Violation(f"{prefix}-identity", (zero, a),
                                 f"{zero}+{a} = {add[zero][a]} != {a}"))
    for a in range(n):
        row = add[a]
        for b in range(a + 1, n):
            if row[b] != add[b][a]:
                out.append(Violation(f"{prefix}-commutative", (a, b),
                                     f"{a}+{b} != {b}+{a}"))
    for a in range(n):
        for b in range(n):
            ab = add[a][b]
            row_a = add[a]
            for c in range(n):
                if add[ab][c] != row_a[add[b][c]]:
                    out.append(Violation(f"{prefix}-associative", (a, b, c),
                                         f"({a}+{b})+{c} != {a}+({b}+{c})"))
                    break
            else:
                continue
            break
    return out


@dataclass(frozen=True)
class Semiring:
    """Finite semiring with explicit addition and multiplication tables."""

    labels: tuple[str, ...]
    add: Table
    mul: Table
    zero: int
    one: int

    @property
    def size(self) -> int:
        return len(self.labels)

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.labels, self.add, self.mul, self.zero, self.one))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Semiring({self.size} elements)"

    @property
    def commutative(self) -> bool:
        n = self.size
        return all(self.mul[a][b] == self.mul[b][a] for a in range(n) for b in range(n))


def semiring_violations(labels, add: Table, mul: Table, zero: int, one: int) -> list[Violation]:
    n = len(labels)
    out = commutative_monoid_violations(add, zero, "add")
    # multiplicative monoid: associativity and two-sided identity
    for a in range(n):
        if mul[one][a] != a or mul[a][one] != a:
            out.append(Violation("mul-identity", (one, a),
                                 f"1*{a} = {mul[one][a]}, {a}*1 = {mul[a][one]}"))
    for a in range(n):
        for b in range(n):
            ab = mul[a][b]
            for c in range(n):
                if mul[ab][c] != mul[a][mul[b][c]]:
                    out.append(Violation("mul-associative", (a, b, c)))
                    break
            else:
                continue
            break
    for a in range(n):
        for b in range(n):
            bc_row = add[b]
            for c in range(n):
                if mul[a][bc_row[c]] != add[mul[a][b]][mul[a][c]]:
                    out.append(Violation("left-distributive", (a, b, c),
                                         f"{a}*({b}+{c}) != {a}*{b}+{a}*{c}"))
                    break
                if mul[bc_row[c]][a] != add[mul[b][a]][mul[c][a]]:
                    out.append(Violation("right-distributive", (b, c, a),
                                         f"({b}+{c})*{a} != {b}*{a}+{c}*{a}"))
                    break
            else:
                continue
            break
    for a in range(n):
        if mul[zero][a] != zero or mul[a][zero] != zero:
            out.append(Violation("zero-absorbing", (zero, a),
                                 f"0*{a} = {mul[zero][a]}, {a}*0 = {mul[a][zero]}"))
    if zero == one:
        out.append(Violation("one-neq-zero", (zero,), "0 and 1 coincide"))
    return out


def build_semiring(labels, add, mul, zero: int, one: int) -> Semiring:
    labels = tuple(str(x) for x in labels)
    n = len(labels)
    add = freeze_table(add)
    mul = freeze_table(mul)
    check_table(add, n, n, "add")
    check_table(mul, n, n, "mul")
    check_entries(add, n, "add")
    check_entries(mul, n, "mul")
    if not (0 <= zero < n and 0 <= one < n):
        raise MalformedTable("zero/one index out of range")
    violations = semiring_violations(labels, add, mul, zero, one)
    if violations:
        raise AxiomViolation("semiring", violations)
    return Semiring(labels, add, mul, zero, one)


@dataclass(frozen=True)
class SecondAction:
    """The other-side scalar action of a bisemimodule."""

    semiring: Semiring
    side: str
    table: Table

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.semiring, self.side, self.table))
            object.__setattr__(self, "_hash", h)
        return h


@dataclass(frozen=True)
class Semimodule:
    """Finite semimodule: commutative monoid with a scalar action table.

    ``action[x][s]`` is x*s for a right module and s*x for a left one.
    An optional second action of side opposite to the primary one turns
    the carrier into a bisemimodule.
    """

    semiring: Semiring
    side: str
    labels: tuple[str, ...]
    add: Table
    zero: int
    action: Table
    second: SecondAction | None = None

    @property
    def size(self) -> int:
        return len(self.labels)

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.semiring, self.side, self.add, self.zero, self.action, self.second))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        tag = "bi" if self.second else self.side
        return f"Semimodule({self.size} elements, {tag}, |S|={self.semiring.size})"

    def act(self, x: int, s: int) -> int:
        return self.action[x][s]


def action_violations(semiring: Semiring, side: str, add: Table, zero: int,
                      action: Table, prefix: str = "action") -> list[Violation]:
    n = len(add)
    S = semiring
    out = []
    for x in range(n):
        for s in range(S.size):
            for t in range(S.size):
                # right: (x s) t = x (s t); left: t (s x) = (t s) x
                if side == RIGHT:
                    lhs = action[action[x][s]][t]
                    rhs = action[x][S.mul[s][t]]
                else:
                    lhs = action[action[x][s]][t]
                    rhs = action[x][S.mul[t][s]]
                if lhs != rhs:
                    out.append(Violation(f"{prefix}-associative", (x, s, t)))
                    break
            else:
                continue
            break
    for x in range(n):
        for y in range(n):
            xy = add[x][y]
            for s in range(S.size):
                if action[xy][s] != add[action[x][s]][action[y][s]]:
                    out.append(Violation(f"{prefix}-add-distributive", (x, y, s)))
                    break
            else:
                continue
            break
    for x in range(n):
        for s in range(S.size):
            for t in range(S.size):
                if action[x][S.add[s][t]] != add[action[x][s]][action[x][t]]:
                    out.append(Violation(f"{prefix}-scalar-distributive", (x, s, t)))
                    break
            else:
                continue
            break
    for x in range(n):
        if action[x][S.one] != x:
            out.append(Violation(f"{prefix}-unit", (x, S.one)))
        if action[x][S.zero] != zero:
            out.append(Violation(f"{prefix}-scalar-zero", (x, S.zero)))
    for s in range(S.size):
        if action[zero][s] != zero:
            out.append(Violation(f"{prefix}-zero-element", (zero, s)))
    return out


def semimodule_violations(semiring, side, add, zero, action,
                          second: SecondAction | None = None) -> list[Violation]:
    out = commutative_monoid_violations(add, zero, "add")
    out.extend(action_violations(semiring, side, add, zero, action))
    if second is not None:
        out.extend(action_violations(second.semiring, second.side, add, zero,
                                     second.table, prefix="second-action"))
        n = len(add)
        for x in range(n):
            for s in range(semiring.size):
                xs = action[x][s]
                for t in range(second.semiring.size):
                    if second.table[xs][t] != action[second.table[x][t]][s]:
                        out.append(Violation("actions-commute", (x, s, t)))
                        break
                else:
                    continue
                break
    return out


def build_semimodule(semiring: Semiring, side: str, labels, add, zero: int, action,
                     second: SecondAction | None = None) -> Semimodule:
    if side not in (LEFT, RIGHT):
        raise MalformedTable(f"side must be 'left' or 'right', got {side!r}")
    labels = tuple(str(x) for x in labels)
    n = len(labels)
    add = freeze_table(add)
    action = freeze_table(action)
    check_table(add, n, n, "add")
    check_table(action, n, semiring.size, "action")
    check_entries(add, n, "add")
    check_entries(action, n, "action")
    if not 0 <= zero < n:
        raise MalformedTable("zero index out of range")
    if second is not None:
        if second.side == side:
            raise SideMismatch("second action must act on the opposite side")
        second = SecondAction(second.semiring, second.side, freeze_table(second.table))
        check_table(second.table, n, second.semiring.size, "second action")
        check_entries(second.table, n, "second action")
    violations = semimodule_violations(semiring, side, add, zero, action, second)
    if violations:
        raise AxiomViolation("semimodule", violations)
    return Semimodule(semiring, side, labels, add, zero, action, second)


@dataclass(frozen=True)
class Morphism:
    """Structure-preserving map between semimodules over one semiring."""

    source: Semimodule
    target: Semimodule
    map: tuple[int, ...]
    injective: bool = field(compare=False, default=False)
    surjective: bool = field(compare=False, default=False)

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.source, self.target, self.map))
            object.__setattr__(self, "_hash", h)
        return h

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __repr__(self):
        return f"Morphism({self.source.size}->{self.target.size}, {list(self.map)})"

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.map)))


def morphism_violations(source: Semimodule, target: Semimodule, mapping) -> list[Violation]:
    out = []
    n = source.size
    for a in range(n):
        fa = mapping[a]
        for b in range(a, n):
            if mapping[source.add[a][b]] != target.add[fa][mapping[b]]:
                out.append(Violation("map-additive", (a, b),
                                     f"f({a}+{b}) != f({a})+f({b})"))
    for a in range(n):
        for s in range(source.semiring.size):
            if mapping[source.action[a][s]] != target.action[mapping[a]][s]:
                out.append(Violation("map-linear", (a, s), f"f({a}.s{s}) != f({a}).s{s}"))
    if mapping[source.zero] != target.zero:
        out.append(Violation("map-zero", (source.zero,), "f(0) != 0"))
    return out


def build_morphism(source: Semimodule, target: Semimodule, mapping) -> Morphism:
    if source.semiring != target.semiring:
        raise SideMismatch("source and target live over different semirings")
    if source.side != target.side:
        raise SideMismatch(f"source is {source.side}-sided, target is {target.side}-sided")
    mapping = tuple(int(x) for x in mapping)
    if len(mapping) != source.size:
        raise MalformedTable(f"map has {len(mapping)} entries for {source.size} elements")
    for x in mapping:
        if not 0 <= x < target.size:
            raise MalformedTable(f"map value {x} out of range")
    violations = morphism_violations(source, target, mapping)
    if violations:
        raise AxiomViolation("morphism", violations)
    injective = len(set(mapping)) == source.size
    surjective = len(set(mapping)) == target.size
    return Morphism(source, target, mapping, injective, surjective)


def identity_morphism(M: Semimodule) -> Morphism:
    return Morphism(M, M, tuple(range(M.size)), True, True)


def zero_morphism(M: Semimodule, N: Semimodule) -> Morphism:
    mapping = tuple(N.zero for _ in range(M.size))
    return build_morphism(M, N, mapping)


def compose(f: Morphism, g: Morphism) -> Morphism:
    """Composite f after g."""
    if g.target != f.source:
        raise SideMismatch("composite endpoints do not match")
    mapping = tuple(f.map[x] for x in g.map)
    inj = len(set(mapping)) == g.source.size
    surj = len(set(mapping)) == f.target.size
    return Morphism(g.source, f.target, mapping, inj, surj)


def element_order(add: Table, zero: int, x: int) -> tuple[int, int]:
    """Least (index i, period p) with (i+p)x = ix under repeated addition."""
    seen = {zero: 0}
    cur = zero
    k = 0
    while True:
        cur = add[cur][x]
        k += 1
        if cur in seen:
            i = seen[cur]
            return i, k - i
        seen[cur] = k


def element_orders(M: Semimodule) -> tuple[tuple[int, int], ...]:
    return tuple(element_order(M.add, M.zero, x) for x in range(M.size))


def monoid_orders(add: Table, zero: int) -> tuple[tuple[int, int], ...]:
    return tuple(element_order(add, zero, x) for x in range(len(add)))


def is_cancellative_table(add: Table) -> bool:
    n = len(add)
    for c in range(n):
        seen = [add[a][c] for a in range(n)]
        if len(set(seen)) != n:
            return False
    return True


def is_cancellative(M: Semimodule) -> bool:
    return is_cancellative_table(M.add)


# ---------------------------------------------------------------------------
# Abelian monoids as semimodules over a monogenic coefficient semiring.
#
# A finite commutative monoid with global additive index I and period P is a
# module over N/(I+P ~ I); wrapping families over a joint (I, P) makes plain
# monoid morphisms typecheck as linear maps.
# ---------------------------------------------------------------------------

def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a * b // gcd(a, b)


def monoid_index_period(add: Table, zero: int) -> tuple[int, int]:
    index, period = 0, 1
    for i, p in monoid_orders(add, zero):
        index = max(index, i)
        period = _lcm(period, p)
    return index, period


@lru_cache(maxsize=None)
def counting_semiring(index: int, period: int) -> Semiring:
    """The quotient of the counting semiring N by (index+period ~ index)."""
    if index + period < 2:
        period = 2 - index
    n = index + period

    def red(k: int) -> int:
        return k if k < n else index + (k - index) % period

    labels = tuple(str(k) for k in range(n))
    add = freeze_table([[red(a + b) for b in range(n)] for a in range(n)])
    mul = freeze_table([[red(a * b) for b in range(n)] for a in range(n)])
    return build_semiring(labels, add, mul, 0, 1)


@lru_cache(maxsize=None)
def counting_semiring_for(S: Semiring) -> Semiring:
    """Counting semiring bounding every S-module: the additive order of 1.

    (i+p)*x = i*x holds in any S-module when (i, p) is the additive order
    of the multiplicative unit, since k*x = x.(k*1); monoid-level carriers
    arising from S-modules are therefore all modules over this one semiring.
    """
    return counting_semiring(*element_order(S.add, S.zero, S.one))


def monoid_module(add: Table, zero: int = 0, labels=None,
                  semiring: Semiring | None = None) -> Semimodule:
    """Wrap a commutative monoid table as a module over a counting semiring."""
    add = freeze_table(add)
    n = len(add)
    if labels is None:
        labels = tuple(str(k) for k in range(n))
    if semiring is None:
        semiring = counting_semiring(*monoid_index_period(add, zero))
    action = []
    for x in range(n):
        row = []
        cur = zero
        for _ in range(semiring.size):
            row.append(cur)
            cur = add[cur][x]
        # row[k] currently equals k*x because we appended before stepping
        action.append(row)
    return build_semimodule(semiring, RIGHT, labels, add, zero, freeze_table(action))


def common_monoid_modules(parts: list[tuple[Table, int, tuple[str, ...] | None]]) -> list[Semimodule]:
    """Wrap several monoids over one joint counting semiring."""
    index, period = 0, 1
    for add, zero, _ in parts:
        i, p = monoid_index_period(freeze_table(add), zero)
        index = max(index, i)
        period = _lcm(period, p)
    S = counting_semiring(index, period)
    return [monoid_module(add, zero, labels, S) for add, zero, labels in parts]


def as_monoid(M: Semimodule) -> tuple[Table, int, tuple[str, ...]]:
    return M.add, M.zero, M.labels


def rehome_pair(A: Semimodule, B: Semimodule) -> tuple[Semimodule, Semimodule]:
    """Re-wrap two monoid-level carriers over one counting semiring."""
    wrapped = common_monoid_modules([as_monoid(A), as_monoid(B)])
    return wrapped[0], wrapped[1]


def monoid_morphism(A: Semimodule, B: Semimodule, mapping) -> Morphism:
    """A monoid map packaged as a linear map over a joint counting semiring."""
    A2, B2 = rehome_pair(A, B)
    return build_morphism(A2, B2, mapping)


# ---------------------------------------------------------------------------
# Side plumbing for commutative coefficient semirings.
# ---------------------------------------------------------------------------

def mirror(M: Semimodule) -> Semimodule:
    """The same carrier viewed from the opposite side (commutative S only)."""
    if not M.semiring.commutative:
        raise SideMismatch("cannot mirror a module over a noncommutative semiring")
    side = LEFT if M.side == RIGHT else RIGHT
    second = None
    if M.second is not None:
        second = SecondAction(M.second.semiring,
                              LEFT if M.second.side == RIGHT else RIGHT,
                              M.second.table)
    return Semimodule(M.semiring, side, M.labels, M.add, M.zero, M.action, second)


def as_left(M: Semimodule) -> Semimodule:
    return M if M.side == LEFT else mirror(M)


def as_right(M: Semimodule) -> Semimodule:
    return M if M.side == RIGHT else mirror(M)


def with_bimodule_structure(M: Semimodule) -> Semimodule:
    """Install the synthesized opposite action (commutative S only)."""
    if M.second is not None:
        return M
    if not M.semiring.commutative:
        raise SideMismatch("second action synthesis needs a commutative semiring")
    other = LEFT if M.side == RIGHT else RIGHT
    return build_semimodule(M.semiring, M.side, M.labels, M.add, M.zero, M.action,
                            SecondAction(M.semiring, other, M.action))


def drop_second(M: Semimodule) -> Semimodule:
    if M.second is None:
        return M
    return Semimodule(M.semiring, M.side, M.labels, M.add, M.zero, M.action, None)


def swap_actions(M: Semimodule) -> Semimodule:
    """Make the second action primary; needed to hom over the other side."""
    if M.second is None:
        raise SideMismatch("module has no second action")
    first = SecondAction(M.semiring, M.side, M.action)
    return Semimodule(M.second.semiring, M.second.side, M.labels, M.add, M.zero,
                      M.second.table, first)


# ---------------------------------------------------------------------------
# Isomorphism search with iterated signature refinement.
# ---------------------------------------------------------------------------

def _signatures(add: Table, zero: int, action: Table | None) -> list:
    n = len(add)
    sig = [(element_order(add, zero, x), add[x][x] == x, x == zero) for x in range(n)]
    for _ in range(n):
        canon = {s: i for i, s in enumerate(sorted(set(sig), key=repr))}
        base = [canon[s] for s in sig]
        nxt = []
        for x in range(n):
            neigh = sorted((base[y], base[add[x][y]]) for y in range(n))
            act = tuple(base[v] for v in action[x]) if action is not None else ()
            nxt.append((base[x], tuple(neigh), act))
        if len(set(nxt)) == len(set(sig)) and all(
                (sig[x] == sig[y]) == (nxt[x] == nxt[y]) for x in range(n) for y in range(n)):
            return sig
        sig = nxt
    return sig


def find_monoid_isomorphism(add1: Table, zero1: int, add2: Table, zero2: int,
                            action1: Table | None = None,
                            action2: Table | None = None) -> tuple[int, ...] | None:
    """Search a table isomorphism; actions, when given, share scalar indices.

    Backtracks over the images of a minimal additive generating set only;
    each assignment is closed under addition with conflict detection, so
    non-generators are never branched on.
    """
    n = len(add1)
    if len(add2) != n:
        return None
    sig1 = _signatures(add1, zero1, action1)
    sig2 = _signatures(add2, zero2, action2)
    if sorted(map(repr, sig1)) != sorted(map(repr, sig2)):
        return None

    span = {zero1}
    gens: list[int] = []
    for x in range(n):
        if x not in span:
            gens.append(x)
            frontier = [x]
            span.add(x)
            while frontier:
                a = frontier.pop()
                for b in list(span):
                    c = add1[a][b]
                    if c not in span:
                        span.add(c)
                        frontier.append(c)
    candidates = [[y for y in range(n) if repr(sig2[y]) == repr(sig1[g])] for g in gens]

    def extend(images) -> tuple[int, ...] | None:
        mapping = {zero1: zero2}
        for g, y in zip(gens, images):
            if mapping.get(g, y) != y:
                return None
            mapping[g] = y
        frontier = list(mapping)
        while frontier:
            a = frontier.pop()
            ya = mapping[a]
            for b in list(mapping):
                c = add1[a][b]
                c2 = add2[ya][mapping[b]]
                known = mapping.get(c)
                if known is None:
                    mapping[c] = c2
                    frontier.append(c)
                elif known != c2:
                    return None
        if len(mapping) != n or len(set(mapping.values())) != n:
            return None
        out = tuple(mapping[x] for x in range(n))
        for a in range(n):
            row = add1[a]
            for b in range(a, n):
                if out[row[b]] != add2[out[a]][out[b]]:
                    return None
        if action1 is not None:
            for a in range(n):
                for s in range(len(action1[0])):
                    if out[action1[a][s]] != action2[out[a]][s]:
                        return None
        return out

    used = [False] * n
    chosen = [0] * len(gens)

    def backtrack(k: int):
        if k == len(gens):
            return extend(chosen)
        for y in candidates[k]:
            if used[y]:
                continue
            chosen[k] = y
            used[y] = True
            result = backtrack(k + 1)
            used[y] = False
            if result is not None:
                return result
        return None

    if not gens:
        return extend(()) if n == 1 else None
    return backtrack(0)


def find_isomorphism(A: Semimodule, B: Semimodule, monoid_only: bool = False) -> tuple[int, ...] | None:
    if monoid_only:
        return find_monoid_isomorphism(A.add, A.zero, B.add, B.zero)
    if A.semiring != B.semiring or A.side != B.side:
        return None
    return find_monoid_isomorphism(A.add, A.zero, B.add, B.zero, A.action, B.action)


def isomorphic(A: Semimodule, B: Semimodule, monoid_only: bool = False) -> bool:
    return find_isomorphism(A, B, monoid_only=monoid_only) is not None
