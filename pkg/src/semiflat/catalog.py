"""Built-in finite semirings and semimodules used as the test universe.

Includes the table-level constructors (cyclic, saturating, modular,
products, free modules), per-semiring module pools for the property
suites, and bounded enumeration of commutative monoids and semimodules
up to isomorphism.
"""
from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .congruence import module_congruence_closure, quotient_by_congruence
from .errors import MalformedTable, SizeBoundExceeded
from .structures import (LEFT, RIGHT, Semimodule, Semiring, Table,
                         build_semimodule, build_semiring, freeze_table,
                         monoid_module)
from .subsets import submodule_of, subsemimodule


@lru_cache(maxsize=None)
def bool_semiring() -> Semiring:
    return build_semiring(["0", "1"], [[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, 1)


@lru_cache(maxsize=None)
def sat_semiring(k: int) -> Semiring:
    """Saturating arithmetic on {0..k}: a+b and a*b clipped at k."""
    n = k + 1
    labels = [str(i) for i in range(n)]
    add = [[min(a + b, k) for b in range(n)] for a in range(n)]
    mul = [[min(a * b, k) for b in range(n)] for a in range(n)]
    return build_semiring(labels, add, mul, 0, 1)


@lru_cache(maxsize=None)
def zmod_semiring(n: int) -> Semiring:
    labels = [str(i) for i in range(n)]
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return build_semiring(labels, add, mul, 0, 1)


@lru_cache(maxsize=None)
def product_semiring(A: Semiring, B: Semiring) -> Semiring:
    pairs = [(a, b) for a in range(A.size) for b in range(B.size)]
    pos = {p: i for i, p in enumerate(pairs)}
    labels = [f"({A.labels[a]},{B.labels[b]})" for a, b in pairs]
    add = [[pos[(A.add[a][c], B.add[b][d])] for c, d in pairs] for a, b in pairs]
    mul = [[pos[(A.mul[a][c], B.mul[b][d])] for c, d in pairs] for a, b in pairs]
    return build_semiring(labels, add, mul, pos[(A.zero, B.zero)], pos[(A.one, B.one)])


@lru_cache(maxsize=None)
def free_module(S: Semiring, rank: int, side: str = RIGHT) -> Semimodule:
    """Direct power of the semiring acting on itself."""
    if rank == 0:
        return trivial_module(S, side)
    tuples = list(itertools.product(range(S.size), repeat=rank))
    pos = {t: i for i, t in enumerate(tuples)}
    if rank == 1:
        labels = list(S.labels)
    else:
        labels = ["(" + ",".join(S.labels[i] for i in t) + ")" for t in tuples]
    add = [[pos[tuple(S.add[x][y] for x, y in zip(t, u))] for u in tuples] for t in tuples]
    if side == RIGHT:
        action = [[pos[tuple(S.mul[x][s] for x in t)] for s in range(S.size)] for t in tuples]
    else:
        action = [[pos[tuple(S.mul[s][x] for x in t)] for s in range(S.size)] for t in tuples]
    zero = pos[tuple(S.zero for _ in range(rank))]
    return build_semimodule(S, side, labels, add, zero, action)


def semiring_module(S: Semiring, side: str = RIGHT) -> Semimodule:
    return free_module(S, 1, side)


@lru_cache(maxsize=None)
def semiring_bimodule(S: Semiring, primary: str = RIGHT) -> Semimodule:
    """S acting on itself from both sides; no commutativity needed."""
    from .structures import SecondAction
    right_table = freeze_table([[S.mul[x][t] for t in range(S.size)] for x in range(S.size)])
    left_table = freeze_table([[S.mul[s][x] for s in range(S.size)] for x in range(S.size)])
    if primary == RIGHT:
        second = SecondAction(S, LEFT, left_table)
        return build_semimodule(S, RIGHT, S.labels, S.add, S.zero, right_table, second)
    second = SecondAction(S, RIGHT, right_table)
    return build_semimodule(S, LEFT, S.labels, S.add, S.zero, left_table, second)


@lru_cache(maxsize=None)
def trivial_module(S: Semiring, side: str = RIGHT) -> Semimodule:
    return build_semimodule(S, side, ["0"], [[0]], 0, [[0] * S.size])


@lru_cache(maxsize=None)
def zmod_module(n: int, d: int, side: str = RIGHT) -> Semimodule:
    """Z/d as a module over the modular semiring Z/n; requires d | n."""
    if n % d != 0:
        raise MalformedTable(f"{d} does not divide {n}")
    S = zmod_semiring(n)
    labels = [str(i) for i in range(d)]
    add = [[(a + b) % d for b in range(d)] for a in range(d)]
    action = [[(a * s) % d for s in range(n)] for a in range(d)]
    return build_semimodule(S, side, labels, add, 0, action)


@lru_cache(maxsize=None)
def chain_module(k: int, side: str = RIGHT) -> Semimodule:
    """The k-element chain semilattice 0 < 1 < ... < k-1 over the Boolean semiring."""
    S = bool_semiring()
    labels = [str(i) for i in range(k)]
    add = [[max(a, b) for b in range(k)] for a in range(k)]
    action = [[0, a] for a in range(k)]
    return build_semimodule(S, side, labels, add, 0, action)


@lru_cache(maxsize=None)
def product_module(A: Semimodule, B: Semimodule) -> Semimodule:
    """Componentwise product carrier; structure maps live in the limits module."""
    if A.semiring != B.semiring or A.side != B.side:
        raise MalformedTable("product factors must share semiring and side")
    pairs = [(a, b) for a in range(A.size) for b in range(B.size)]
    pos = {p: i for i, p in enumerate(pairs)}
    labels = [f"({A.labels[a]},{B.labels[b]})" for a, b in pairs]
    add = [[pos[(A.add[a][c], B.add[b][d])] for c, d in pairs] for a, b in pairs]
    action = [[pos[(A.action[a][s], B.action[b][s])] for s in range(A.semiring.size)]
              for a, b in pairs]
    return build_semimodule(A.semiring, A.side, labels, add,
                            pos[(A.zero, B.zero)], action)


@lru_cache(maxsize=None)
def cyclic_monoid(index: int, period: int) -> Table:
    """Monogenic commutative monoid table with the given index and period."""
    n = index + period

    def red(k: int) -> int:
        return k if k < n else index + (k - index) % period

    return freeze_table([[red(a + b) for b in range(n)] for a in range(n)])


def product_monoid(t1: Table, t2: Table) -> Table:
    n1, n2 = len(t1), len(t2)
    pairs = [(a, b) for a in range(n1) for b in range(n2)]
    pos = {p: i for i, p in enumerate(pairs)}
    return freeze_table([[pos[(t1[a][c], t2[b][d])] for c, d in pairs] for a, b in pairs])


@lru_cache(maxsize=None)
def cancellative_targets(max_size: int = 4) -> tuple[Semimodule, ...]:
    """All cancellative commutative monoids of bounded size, i.e. abelian groups."""
    tables: list[Table] = []
    for n in range(1, max_size + 1):
        tables.append(cyclic_monoid(0, n))
    if max_size >= 4:
        tables.append(product_monoid(cyclic_monoid(0, 2), cyclic_monoid(0, 2)))
    return tuple(monoid_module(t) for t in tables if len(t) <= max_size)


# ---------------------------------------------------------------------------
# Named catalogs and suite pools.
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def sat_quotient(k: int, a: int, b: int) -> Semimodule:
    """Quotient of the saturating semiring module by gluing a ~ b."""
    M = semiring_module(sat_semiring(k))
    cong = module_congruence_closure(M, [(a, b)])
    Q, _ = quotient_by_congruence(M, cong)
    return Q


@lru_cache(maxsize=None)
def suite_pool(S: Semiring) -> tuple[tuple[str, Semimodule], ...]:
    """Small per-semiring module pool (sizes <= 4) for the property suites."""
    if S == bool_semiring():
        return (("TRIV", trivial_module(S)),
                ("S", semiring_module(S)),
                ("S2", free_module(S, 2)),
                ("CHAIN3", chain_module(3)))
    if S == sat_semiring(3):
        M = semiring_module(S)
        sub03, _ = submodule_of(M, subsemimodule(M, (0, 3)))
        return (("TRIV", trivial_module(S)),
                ("S", M),
                ("U03", sub03),
                ("Q12", sat_quotient(3, 1, 2)))
    if S == zmod_semiring(4):
        return (("TRIV", trivial_module(S)),
                ("S", semiring_module(S)),
                ("Z2", zmod_module(4, 2)),
                ("Z2xZ2", product_module(zmod_module(4, 2), zmod_module(4, 2))))
    if S == zmod_semiring(2):
        return (("TRIV", trivial_module(S)),
                ("S", semiring_module(S)),
                ("SxS", free_module(S, 2)))
    return (("TRIV", trivial_module(S)),
            ("S", semiring_module(S)),
            ("S2", free_module(S, 2)))


def suite_semirings() -> tuple[Semiring, ...]:
    return bool_semiring(), sat_semiring(3), zmod_semiring(4)


@lru_cache(maxsize=None)
def standard_catalog(S: Semiring) -> tuple[tuple[str, Semimodule], ...]:
    """Pool plus every subsemimodule and subsemimodule quotient of S."""
    from .congruence import quotient_by_sub
    from .subsets import enumerate_subsemimodules
    out = list(suite_pool(S))
    names = {n for n, _ in out}
    M = semiring_module(S)
    for U in enumerate_subsemimodules(M):
        if len(U) in (1, M.size):
            continue
        name = "U" + "".join(str(x) for x in U.members)
        if name not in names:
            sub, _ = submodule_of(M, U)
            out.append((name, sub))
            names.add(name)
        qname = "Q" + "".join(str(x) for x in U.members)
        if qname not in names:
            Q, _ = quotient_by_sub(M, U)
            out.append((qname, Q))
            names.add(qname)
    return tuple(out)


# ---------------------------------------------------------------------------
# Bounded enumeration up to isomorphism.
# ---------------------------------------------------------------------------

def _monoid_candidates(n: int):
    """Commutative tables with identity 0, associativity unchecked."""
    cells = [(a, b) for a in range(1, n) for b in range(a, n)]
    for values in itertools.product(range(n), repeat=len(cells)):
        table = [[0] * n for _ in range(n)]
        for a in range(n):
            table[0][a] = table[a][0] = a
        for (a, b), v in zip(cells, values):
            table[a][b] = table[b][a] = v
        yield table


def _is_associative(t, n: int) -> bool:
    for a in range(n):
        ta = t[a]
        for b in range(a, n):
            tab = t[a][b]
            for c in range(b, n):
                if t[tab][c] != ta[t[b][c]]:
                    return False
    return True


def _canonical_monoid(t: Table) -> Table:
    n = len(t)
    best = None
    for perm in itertools.permutations(range(1, n)):
        p = (0,) + perm
        inv = [0] * n
        for i, x in enumerate(p):
            inv[x] = i
        cand = tuple(tuple(inv[t[p[a]][p[b]]] for b in range(n)) for a in range(n))
        if best is None or cand < best:
            best = cand
    return best


@lru_cache(maxsize=None)
def enumerate_commutative_monoids(n: int, up_to_iso: bool = True) -> tuple[Table, ...]:
    if n > 5:
        raise SizeBoundExceeded("commutative monoid enumeration", n, 5)
    out = []
    seen = set()
    for t in _monoid_candidates(n):
        if not _is_associative(t, n):
            continue
        frozen = freeze_table(t)
        if up_to_iso:
            canon = _canonical_monoid(frozen)
            if canon in seen:
                continue
            seen.add(canon)
            out.append(canon)
        else:
            out.append(frozen)
    return tuple(sorted(out))


def _monoid_endomorphisms(t: Table) -> list[tuple[int, ...]]:
    n = len(t)
    out = []
    for values in itertools.product(range(n), repeat=n - 1):
        f = (0,) + values
        if all(f[t[a][b]] == t[f[a]][f[b]] for a in range(n) for b in range(a, n)):
            out.append(f)
    return out


@lru_cache(maxsize=None)
def enumerate_semimodules(S: Semiring, max_size: int,
                          side: str = RIGHT) -> tuple[Semimodule, ...]:
    """All right S-semimodules with at most max_size elements, up to isomorphism."""
    if max_size > 5:
        raise SizeBoundExceeded("semimodule enumeration", max_size, 5)
    out: list[Semimodule] = []
    seen: set = set()
    for n in range(1, max_size + 1):
        for add in enumerate_commutative_monoids(n):
            endos = _monoid_endomorphisms(add)
            zero_map = tuple(0 for _ in range(n))
            ident = tuple(range(n))
            free_scalars = [s for s in range(S.size) if s not in (S.zero, S.one)]
            for choice in itertools.product(range(len(endos)), repeat=len(free_scalars)):
                fs: list[tuple[int, ...] | None] = [None] * S.size
                fs[S.zero] = zero_map
                fs[S.one] = ident
                for s, ci in zip(free_scalars, choice):
                    fs[s] = endos[ci]
                ok = True
                for s in range(S.size):
                    if not ok:
                        break
                    for t2 in range(S.size):
                        st = S.mul[s][t2]
                        s_plus_t = S.add[s][t2]
                        for x in range(n):
                            if fs[st][x] != fs[t2][fs[s][x]]:
                                ok = False
                                break
                            if fs[s_plus_t][x] != add[fs[s][x]][fs[t2][x]]:
                                ok = False
                                break
                        if not ok:
                            break
                if not ok:
                    continue
                action = freeze_table([[fs[s][x] for s in range(S.size)] for x in range(n)])
                key = None
                perm_found = False
                for perm in itertools.permutations(range(1, n)):
                    p = (0,) + perm
                    inv = [0] * n
                    for i, x in enumerate(p):
                        inv[x] = i
                    cadd = tuple(tuple(inv[add[p[a]][p[b]]] for b in range(n)) for a in range(n))
                    cact = tuple(tuple(inv[action[p[a]][s]] for s in range(S.size))
                                 for a in range(n))
                    cand = (cadd, cact)
                    if key is None or cand < key:
                        key = cand
                if key in seen:
                    continue
                seen.add(key)
                labels = [f"m{i}" for i in range(n)]
                out.append(build_semimodule(S, side, labels, key[0], 0, key[1]))
    return tuple(out)


# ---------------------------------------------------------------------------
# Corpus of commutative monoids for the congruence-closure oracle.
# ---------------------------------------------------------------------------

def oracle_corpus(count: int = 50, max_size: int = 12, seed: int = 2024):
    """Deterministic family of (table, pairs) cases for the closure oracle."""
    rng = random.Random(seed)
    tables: list[Table] = []
    for index in range(0, 4):
        for period in range(1, 7):
            if 2 <= index + period <= max_size:
                tables.append(cyclic_monoid(index, period))
    small = [cyclic_monoid(i, p) for i in range(0, 3) for p in range(1, 4)
             if 2 <= i + p <= 4]
    for t1 in small:
        for t2 in small:
            prod = product_monoid(t1, t2)
            if len(prod) <= max_size:
                tables.append(prod)
    tables.sort(key=lambda t: (len(t), t))
    cases = []
    i = 0
    while len(cases) < count:
        t = tables[i % len(tables)]
        n = len(t)
        npairs = rng.randrange(1, 4)
        pairs = tuple((rng.randrange(n), rng.randrange(n)) for _ in range(npairs))
        cases.append((t, pairs))
        i += 1
    return cases
