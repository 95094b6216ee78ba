"""Finite (co)limits: products, equalizers, pullbacks, directed (co)limits.

Finite products and coproducts of semimodules share the componentwise
carrier; only the structure morphisms differ.  Directed colimits are
built literally from the disjoint union and the eventual-equality
relation, with the maximum-node evaluation kept alongside as an oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .catalog import product_module
from .congruence import module_congruence_closure, quotient_by_congruence
from .errors import (NotDirected, NotIntertwining, ShapeMismatch,
                     SizeBoundExceeded)
from .config import DEFAULT_BOUNDS
from .homology import hom_module
from .structures import (Morphism, Semimodule, build_morphism,
                         build_semimodule, compose, freeze_table,
                         identity_morphism)
from .subsets import submodule_of, subsemimodule, enumerate_subsemimodules


@dataclass(frozen=True)
class ProductData:
    module: Semimodule
    factors: tuple[Semimodule, ...]
    projections: tuple[Morphism, ...]
    injections: tuple[Morphism, ...]

    def encode(self, parts: tuple[int, ...]) -> int:
        radices = tuple(f.size for f in self.factors)
        idx = 0
        for r, p in zip(radices, parts):
            idx = idx * r + p
        return idx

    def decode(self, idx: int) -> tuple[int, ...]:
        radices = [f.size for f in self.factors]
        out = []
        for r in reversed(radices):
            out.append(idx % r)
            idx //= r
        return tuple(reversed(out))


@lru_cache(maxsize=None)
def direct_sum(factors: tuple[Semimodule, ...],
               max_size: int = DEFAULT_BOUNDS.max_product) -> ProductData:
    """Componentwise biproduct with projections and injections."""
    if not factors:
        raise ShapeMismatch("empty family; use the trivial module explicitly")
    total = 1
    for f in factors:
        total *= f.size
    if total > max_size:
        raise SizeBoundExceeded("product carrier", total, max_size)
    module = factors[0]
    for f in factors[1:]:
        module = product_module(module, f)
    data = ProductData(module, factors, (), ())
    projections = []
    injections = []
    for i, f in enumerate(factors):
        proj = tuple(data.decode(x)[i] for x in range(module.size))
        projections.append(build_morphism(module, f, proj))
        inj = []
        for a in range(f.size):
            parts = tuple(a if j == i else g.zero for j, g in enumerate(factors))
            inj.append(data.encode(parts))
        injections.append(build_morphism(f, module, inj))
    return ProductData(module, factors, tuple(projections), tuple(injections))


def product(factors, semiring=None, side=None,
            max_size: int = DEFAULT_BOUNDS.max_product):
    """Finite product; the empty product is the trivial module."""
    if not factors:
        if semiring is None:
            raise ShapeMismatch("the empty product needs an explicit semiring")
        from .catalog import trivial_module as _triv
        return _triv(semiring, side or "right"), ()
    data = direct_sum(tuple(factors), max_size)
    return data.module, data.projections


def coproduct(factors, semiring=None, side=None,
              max_size: int = DEFAULT_BOUNDS.max_product):
    """Finite coproduct; the empty coproduct is the trivial module."""
    if not factors:
        if semiring is None:
            raise ShapeMismatch("the empty coproduct needs an explicit semiring")
        from .catalog import trivial_module as _triv
        return _triv(semiring, side or "right"), ()
    data = direct_sum(tuple(factors), max_size)
    return data.module, data.injections


def pairing(fs, data: ProductData) -> Morphism:
    """The mediating map <f_1,..,f_k> : X -> product."""
    X = fs[0].source
    if any(f.source != X for f in fs) or len(fs) != len(data.factors):
        raise ShapeMismatch("pairing legs must share a source, one per factor")
    mapping = tuple(data.encode(tuple(f.map[x] for f in fs)) for x in range(X.size))
    return build_morphism(X, data.module, mapping)


def copairing(fs, data: ProductData) -> Morphism:
    """The mediating map [g_1,..,g_k] : coproduct -> X."""
    X = fs[0].target
    if any(f.target != X for f in fs) or len(fs) != len(data.factors):
        raise ShapeMismatch("copairing legs must share a target, one per factor")
    mapping = []
    for idx in range(data.module.size):
        parts = data.decode(idx)
        val = X.zero
        for f, a in zip(fs, parts):
            val = X.add[val][f.map[a]]
        mapping.append(val)
    return build_morphism(data.module, X, tuple(mapping))


def sum_morphism(fs, source_data: ProductData, target_data: ProductData) -> Morphism:
    """Componentwise map between direct sums."""
    if len(fs) != len(source_data.factors):
        raise ShapeMismatch("one component map per factor")
    mapping = []
    for idx in range(source_data.module.size):
        parts = source_data.decode(idx)
        mapping.append(target_data.encode(tuple(f.map[a] for f, a in zip(fs, parts))))
    return build_morphism(source_data.module, target_data.module, tuple(mapping))


def equalizer(f: Morphism, g: Morphism):
    if f.source != g.source or f.target != g.target:
        raise ShapeMismatch("equalizer needs a parallel pair")
    members = [x for x in range(f.source.size) if f.map[x] == g.map[x]]
    sub = subsemimodule(f.source, members)
    return submodule_of(f.source, sub)


def coequalizer(f: Morphism, g: Morphism):
    if f.source != g.source or f.target != g.target:
        raise ShapeMismatch("coequalizer needs a parallel pair")
    pairs = [(f.map[x], g.map[x]) for x in range(f.source.size)]
    cong = module_congruence_closure(f.target, pairs)
    return quotient_by_congruence(f.target, cong)


def pullback(f: Morphism, g: Morphism):
    """Pullback of a cospan f: A -> C <- B : g inside the product A x B."""
    if f.target != g.target:
        raise ShapeMismatch("pullback needs a cospan")
    data = direct_sum((f.source, g.source))
    members = [idx for idx in range(data.module.size)
               if f.map[data.decode(idx)[0]] == g.map[data.decode(idx)[1]]]
    sub = subsemimodule(data.module, members)
    P, inc = submodule_of(data.module, sub)
    p1 = compose(data.projections[0], inc)
    p2 = compose(data.projections[1], inc)
    return P, p1, p2, data, inc


def pullback_mediator(P: Semimodule, inc: Morphism, data: ProductData,
                      u: Morphism, v: Morphism) -> Morphism:
    """The unique map into the pullback induced by a commuting pair."""
    pos = {inc.map[i]: i for i in range(P.size)}
    mapping = tuple(pos[data.encode((u.map[x], v.map[x]))] for x in range(u.source.size))
    return build_morphism(u.source, P, mapping)


# ---------------------------------------------------------------------------
# Directed systems.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DirectedSystem:
    """Finite directed poset of semimodules with coherent transition maps.

    ``order`` lists the strict relations (j, j') with j < j', transitively
    closed; ``maps`` holds one morphism per listed relation.
    """

    nodes: tuple[Semimodule, ...]
    order: tuple[tuple[int, int], ...]
    maps: tuple[Morphism, ...]

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.nodes, self.order, tuple(m.map for m in self.maps)))
            object.__setattr__(self, "_hash", h)
        return h

    def leq(self, j: int, k: int) -> bool:
        return j == k or (j, k) in set(self.order)

    def transition(self, j: int, k: int) -> Morphism:
        if j == k:
            return identity_morphism(self.nodes[j])
        lookup = self.__dict__.get("_tr")
        if lookup is None:
            lookup = dict(zip(self.order, self.maps))
            object.__setattr__(self, "_tr", lookup)
        return lookup[(j, k)]

    def upper_bounds(self, j: int, k: int) -> list[int]:
        return [m for m in range(len(self.nodes)) if self.leq(j, m) and self.leq(k, m)]

    @property
    def maximum(self) -> int:
        n = len(self.nodes)
        for m in range(n):
            if all(self.leq(j, m) for j in range(n)):
                return m
        raise NotDirected("finite directed poset must have a maximum")


def directed_system(nodes, relations, maps) -> DirectedSystem:
    """Close the generating relations transitively and verify coherence."""
    nodes = tuple(nodes)
    n = len(nodes)
    arrows: dict[tuple[int, int], Morphism] = {}
    for (j, k), f in zip(relations, maps):
        if j == k:
            continue
        if f.source != nodes[j] or f.target != nodes[k]:
            raise NotIntertwining(f"transition {j}->{k} has wrong endpoints")
        if (j, k) in arrows and arrows[(j, k)].map != f.map:
            raise NotDirected(f"conflicting transitions for {j}->{k}")
        arrows[(j, k)] = f
    changed = True
    while changed:
        changed = False
        for (a, b), f in list(arrows.items()):
            for (c, d), g in list(arrows.items()):
                if b != c:
                    continue
                comp = compose(g, f)
                if (a, d) not in arrows:
                    arrows[(a, d)] = comp
                    changed = True
                elif arrows[(a, d)].map != comp.map:
                    raise NotDirected(f"incoherent composites along {a}->{b}->{d}")
    for (a, b) in arrows:
        if (b, a) in arrows:
            raise NotDirected(f"cycle between {a} and {b}")
    order = tuple(sorted(arrows))
    sys = DirectedSystem(nodes, order, tuple(arrows[p] for p in order))
    for j in range(n):
        for k in range(j + 1, n):
            if not sys.upper_bounds(j, k):
                raise NotDirected(f"nodes {j} and {k} have no upper bound")
    return sys


def constant_system(M: Semimodule, copies: int = 1) -> DirectedSystem:
    nodes = [M] * copies
    rels = [(i, i + 1) for i in range(copies - 1)]
    maps = [identity_morphism(M) for _ in rels]
    return directed_system(nodes, rels, maps)


def chain_system(morphisms) -> DirectedSystem:
    ms = list(morphisms)
    nodes = [ms[0].source] + [f.target for f in ms]
    rels = [(i, i + 1) for i in range(len(ms))]
    return directed_system(nodes, rels, ms)


@dataclass(frozen=True)
class Colimit:
    system: DirectedSystem
    module: Semimodule
    legs: tuple[Morphism, ...]
    class_of: tuple[tuple[int, ...], ...]   # per node, element -> colimit element


@lru_cache(maxsize=None)
def directed_colimit(sys: DirectedSystem) -> Colimit:
    """Disjoint union modulo eventual equality, with pushforward addition."""
    pairs = [(j, x) for j, M in enumerate(sys.nodes) for x in range(M.size)]
    pos = {p: i for i, p in enumerate(pairs)}
    n = len(pairs)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, (j, x) in enumerate(pairs):
        for i2 in range(i + 1, n):
            j2, x2 = pairs[i2]
            for m in sys.upper_bounds(j, j2):
                if sys.transition(j, m).map[x] == sys.transition(j2, m).map[x2]:
                    ri, ri2 = find(i), find(i2)
                    if ri != ri2:
                        parent[max(ri, ri2)] = min(ri, ri2)
                    break
    root_to_class: dict[int, int] = {}
    cls = [0] * n
    for i in range(n):
        r = find(i)
        if r not in root_to_class:
            root_to_class[r] = len(root_to_class)
        cls[i] = root_to_class[r]
    k = len(root_to_class)
    reps = [None] * k
    for i in range(n - 1, -1, -1):
        reps[cls[i]] = pairs[i]
    S = sys.nodes[0].semiring

    def add_elements(p, q):
        (j, x), (j2, x2) = p, q
        m = min(sys.upper_bounds(j, j2))
        M = sys.nodes[m]
        y = M.add[sys.transition(j, m).map[x]][sys.transition(j2, m).map[x2]]
        return cls[pos[(m, y)]]

    add = freeze_table([[add_elements(p, q) for q in reps] for p in reps])
    action = freeze_table([[cls[pos[(j, sys.nodes[j].action[x][s])]]
                            for s in range(S.size)] for j, x in reps])
    labels = tuple(f"{j}:{sys.nodes[j].labels[x]}" for j, x in reps)
    zero = cls[pos[(0, sys.nodes[0].zero)]]
    module = build_semimodule(S, sys.nodes[0].side, labels, add, zero, action)
    legs = []
    for j, M in enumerate(sys.nodes):
        legs.append(build_morphism(M, module, tuple(cls[pos[(j, x)]] for x in range(M.size))))
    class_table = tuple(tuple(cls[pos[(j, x)]] for x in range(M.size))
                        for j, M in enumerate(sys.nodes))
    colim = Colimit(sys, module, tuple(legs), class_table)
    # the leg at the maximum node evaluates the whole construction
    top = sys.maximum
    leg = colim.legs[top]
    if not (leg.injective and leg.surjective):
        raise NotDirected("colimit disagrees with the maximum-node evaluation")
    return colim


def colimit_morphism(sysX: DirectedSystem, sysY: DirectedSystem, levelwise) -> Morphism:
    """The induced map on colimits of an intertwining family."""
    hs = tuple(levelwise)
    if len(hs) != len(sysX.nodes):
        raise NotIntertwining("one levelwise map per node")
    if sysX.order != sysY.order:
        raise NotIntertwining("systems must share their index poset")
    for (j, k) in sysX.order:
        left = compose(hs[k], sysX.transition(j, k))
        right = compose(sysY.transition(j, k), hs[j])
        if left.map != right.map:
            raise NotIntertwining(f"squares at {j}<={k} do not commute")
    cx = directed_colimit(sysX)
    cy = directed_colimit(sysY)
    mapping = [None] * cx.module.size
    for j, M in enumerate(sysX.nodes):
        for x in range(M.size):
            tgt = cy.class_of[j][hs[j].map[x]]
            src = cx.class_of[j][x]
            if mapping[src] is None:
                mapping[src] = tgt
            elif mapping[src] != tgt:
                raise NotIntertwining("induced map is not well defined")
    return build_morphism(cx.module, cy.module, tuple(mapping))


# ---------------------------------------------------------------------------
# Inverse systems.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InverseSystem:
    """Same poset data as a directed system, with arrows j <= j' : M_j' -> M_j."""

    nodes: tuple[Semimodule, ...]
    order: tuple[tuple[int, int], ...]
    maps: tuple[Morphism, ...]

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.nodes, self.order, tuple(m.map for m in self.maps)))
            object.__setattr__(self, "_hash", h)
        return h

    def transition(self, j: int, k: int) -> Morphism:
        """The map M_k -> M_j for j <= k."""
        if j == k:
            return identity_morphism(self.nodes[j])
        return dict(zip(self.order, self.maps))[(j, k)]


def inverse_system(nodes, relations, maps) -> InverseSystem:
    nodes = tuple(nodes)
    arrows: dict[tuple[int, int], Morphism] = {}
    for (j, k), f in zip(relations, maps):
        if j == k:
            continue
        if f.source != nodes[k] or f.target != nodes[j]:
            raise NotIntertwining(f"transition for {j}<={k} must map node {k} to node {j}")
        arrows[(j, k)] = f
    changed = True
    while changed:
        changed = False
        for (a, b), f in list(arrows.items()):
            for (c, d), g in list(arrows.items()):
                if a != d:
                    continue
                comp = compose(g, f)          # M_b -> M_a -> M_c with c <= a <= b
                if (c, b) not in arrows:
                    arrows[(c, b)] = comp
                    changed = True
                elif arrows[(c, b)].map != comp.map:
                    raise NotDirected(f"incoherent composites along {c}<={a}<={b}")
    order = tuple(sorted(arrows))
    return InverseSystem(nodes, order, tuple(arrows[p] for p in order))


def inverse_limit(sys: InverseSystem, max_size: int = DEFAULT_BOUNDS.max_product):
    """Compatible tuples inside the product, with its projections."""
    data = direct_sum(sys.nodes, max_size)
    members = []
    for idx in range(data.module.size):
        parts = data.decode(idx)
        ok = True
        for (j, k) in sys.order:
            if sys.transition(j, k).map[parts[k]] != parts[j]:
                ok = False
                break
        if ok:
            members.append(idx)
    sub = subsemimodule(data.module, members)
    L, inc = submodule_of(data.module, sub)
    projections = tuple(compose(p, inc) for p in data.projections)
    return L, projections


# ---------------------------------------------------------------------------
# The hom/colimit comparison map.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HomColimitComparison:
    map: Morphism
    injective: bool
    bijective: bool


def hom_colimit_comparison(X: Semimodule, sys: DirectedSystem) -> HomColimitComparison:
    """colim Hom(X, M_j) -> Hom(X, colim M_j) by pushing along the legs."""
    colim = directed_colimit(sys)
    hom_nodes = [hom_module(X, M) for M in sys.nodes]
    rels = list(sys.order)
    maps = []
    for (j, k) in rels:
        f = sys.transition(j, k)
        H1, H2 = hom_nodes[j], hom_nodes[k]
        mapping = tuple(H2.index_of(tuple(f.map[v] for v in m.map)) for m in H1.maps)
        maps.append(build_morphism(H1.module, H2.module, mapping))
    hom_sys = directed_system([h.module for h in hom_nodes], rels, maps)
    hc = directed_colimit(hom_sys)
    target = hom_module(X, colim.module)
    mapping = [None] * hc.module.size
    for j, H in enumerate(hom_nodes):
        for i, alpha in enumerate(H.maps):
            composite = tuple(colim.class_of[j][alpha.map[x]] for x in range(X.size))
            tgt = target.index_of(composite)
            src = hc.class_of[j][i]
            if mapping[src] is None:
                mapping[src] = tgt
            elif mapping[src] != tgt:
                raise NotIntertwining("comparison map is not well defined")
    psi = build_morphism(hc.module, target.module, tuple(mapping))
    return HomColimitComparison(psi, psi.injective, psi.injective and psi.surjective)


def subsemimodule_system(M: Semimodule) -> tuple[DirectedSystem, Morphism]:
    """All subsemimodules of M under inclusion, with the colimit comparison to M."""
    subs = enumerate_subsemimodules(M)
    nodes = []
    incs = []
    for U in subs:
        mod, inc = submodule_of(M, U)
        nodes.append(mod)
        incs.append(inc)
    rels = []
    maps = []
    for a, U in enumerate(subs):
        for b, V in enumerate(subs):
            if a != b and set(U.members) <= set(V.members):
                posV = {x: i for i, x in enumerate(V.members)}
                mapping = tuple(posV[x] for x in U.members)
                rels.append((a, b))
                maps.append(build_morphism(nodes[a], nodes[b], mapping))
    sys = directed_system(nodes, rels, maps)
    colim = directed_colimit(sys)
    mapping = [None] * colim.module.size
    for j, U in enumerate(subs):
        for i, x in enumerate(U.members):
            src = colim.class_of[j][i]
            if mapping[src] is None:
                mapping[src] = x
    comparison = build_morphism(colim.module, M, tuple(mapping))
    return sys, comparison
