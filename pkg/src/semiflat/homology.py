"""Kernels, cokernels, uniformity profiles, exactness grades, hom monoids.

All predicates are decided by scans over the finite carriers.  A morphism
is k-uniform when every collision is explained by kernel corrections,
i-uniform when its image is subtractively closed, uniform when both hold.
A three-term stage is proper-exact when image = kernel, semi-exact when
the subtractive closure of the image is the kernel, quasi-exact when it
is semi-exact with k-uniform outgoing map, and exact when it is
proper-exact with k-uniform outgoing map.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .config import DEFAULT_BOUNDS
from .errors import NotComposable, NotCommutative, SizeBoundExceeded
from .structures import (Morphism, SecondAction, Semimodule, Semiring,
                         build_morphism, build_semimodule, build_semiring,
                         compose, counting_semiring_for, freeze_table,
                         monoid_morphism, zero_morphism, LEFT, RIGHT)
from .subsets import (Subsemimodule, module_expressions, module_generators,
                      submodule_of, subsemimodule, subtractive_closure_set,
                      uniform_subsemimodules)
from .congruence import quotient_by_sub


def kernel(f: Morphism) -> Subsemimodule:
    members = tuple(x for x in range(f.source.size) if f.map[x] == f.target.zero)
    return subsemimodule(f.source, members)


def image_sub(f: Morphism) -> Subsemimodule:
    return subsemimodule(f.target, sorted(set(f.map)))


def cokernel(f: Morphism) -> tuple[Semimodule, Morphism]:
    return quotient_by_sub(f.target, image_sub(f))


@dataclass(frozen=True)
class MorphismProfile:
    injective: bool
    surjective: bool
    k_uniform: bool
    i_uniform: bool
    semi_epi: bool
    k_witness: tuple[int, int] | None = None
    i_witness: int | None = None

    @property
    def uniform(self) -> bool:
        return self.k_uniform and self.i_uniform


@lru_cache(maxsize=None)
def morphism_profile(f: Morphism) -> MorphismProfile:
    src, tgt = f.source, f.target
    ker = [x for x in range(src.size) if f.map[x] == tgt.zero]
    corrected = [frozenset(src.add[x][k] for k in ker) for x in range(src.size)]
    by_value: dict[int, list[int]] = {}
    for x in range(src.size):
        by_value.setdefault(f.map[x], []).append(x)
    k_uniform, k_witness = True, None
    for group in by_value.values():
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                a, b = group[i], group[j]
                if corrected[a].isdisjoint(corrected[b]):
                    k_uniform, k_witness = False, (a, b)
                    break
            if not k_uniform:
                break
        if not k_uniform:
            break
    img = sorted(set(f.map))
    closed = subtractive_closure_set(tgt.add, tgt.zero, img)
    i_uniform = tuple(img) == closed
    i_witness = None
    if not i_uniform:
        i_witness = next(x for x in closed if x not in set(img))
    semi_epi = len(closed) == tgt.size
    return MorphismProfile(f.injective, f.surjective, k_uniform, i_uniform,
                           semi_epi, k_witness, i_witness)


def is_uniform(f: Morphism) -> bool:
    return morphism_profile(f).uniform


@dataclass(frozen=True)
class StageFlags:
    chain_step: bool
    proper_exact: bool
    semi_exact: bool
    quasi_exact: bool
    exact: bool
    witness: tuple = ()


@dataclass(frozen=True)
class ExactnessReport:
    stages: tuple[StageFlags, ...]

    @property
    def exact(self) -> bool:
        return all(s.exact for s in self.stages)

    def all_of(self, grade: str) -> bool:
        return all(getattr(s, grade) for s in self.stages)


def classify_stage(f: Morphism, g: Morphism) -> StageFlags:
    if f.target != g.source:
        raise NotComposable("stage maps do not compose")
    mid = f.target
    img = sorted(set(f.map))
    ker = [x for x in range(mid.size) if g.map[x] == g.target.zero]
    chain = all(g.map[y] == g.target.zero for y in img)
    proper = img == ker
    closed = list(subtractive_closure_set(mid.add, mid.zero, img))
    semi = closed == ker
    g_k = morphism_profile(g).k_uniform
    witness = ()
    if not semi:
        diff = set(closed).symmetric_difference(ker)
        witness = (sorted(diff)[0],)
    return StageFlags(chain, proper, semi, semi and g_k, proper and g_k, witness)


def classify_sequence(morphisms) -> ExactnessReport:
    ms = list(morphisms)
    if len(ms) < 2:
        raise NotComposable("need at least two maps to classify a stage")
    stages = []
    for f, g in zip(ms, ms[1:]):
        stages.append(classify_stage(f, g))
    return ExactnessReport(tuple(stages))


def with_zero_ends(morphisms, left: bool = True, right: bool = True):
    """Pad a sequence with maps from/to the trivial module over the same semiring."""
    from .catalog import trivial_module
    ms = list(morphisms)
    T = trivial_module(ms[0].source.semiring, ms[0].source.side)
    if left:
        ms.insert(0, zero_morphism(T, ms[0].source))
    if right:
        ms.append(zero_morphism(ms[-1].target, T))
    return ms


def short_sequence_of_sub(M: Semimodule, U: Subsemimodule):
    """The canonical 0 -> U -> M -> M/U -> 0 built from a subsemimodule."""
    sub, inc = submodule_of(M, U)
    Q, pi = quotient_by_sub(M, U)
    return with_zero_ends([inc, pi])


# ---------------------------------------------------------------------------
# Hom monoids.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HomModule:
    """All linear maps between two semimodules, packaged as a module.

    ``module`` carries the pointwise addition; the scalar action comes from
    a second action on either argument when present, and from a counting
    semiring otherwise.  ``maps[i]`` is the morphism encoded by element i.
    """

    source: Semimodule
    target: Semimodule
    module: Semimodule
    maps: tuple[Morphism, ...]

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.source, self.target, self.module))
            object.__setattr__(self, "_hash", h)
        return h

    def index_of(self, mapping) -> int:
        key = tuple(mapping)
        lookup = self.__dict__.get("_lookup")
        if lookup is None:
            lookup = {m.map: i for i, m in enumerate(self.maps)}
            object.__setattr__(self, "_lookup", lookup)
        return lookup[key]


def linear_maps(M: Semimodule, N: Semimodule,
                max_candidates: int = DEFAULT_BOUNDS.max_hom_candidates) -> list[tuple[int, ...]]:
    """All linear maps M -> N by extension from a minimal generating set."""
    gens = module_generators(M)
    exprs = module_expressions(M)
    if N.size ** len(gens) > max_candidates:
        raise SizeBoundExceeded("hom enumeration", N.size ** len(gens), max_candidates)
    found = []
    for images in itertools.product(range(N.size), repeat=len(gens)):
        table = []
        for x in range(M.size):
            val = N.zero
            for gi, s in exprs[x]:
                val = N.add[val][N.action[images[gi]][s]]
            table.append(val)
        ok = True
        for a in range(M.size):
            ta = table[a]
            for b in range(a, M.size):
                if table[M.add[a][b]] != N.add[ta][table[b]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for a in range(M.size):
                for s in range(M.semiring.size):
                    if table[M.action[a][s]] != N.action[table[a]][s]:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            found.append(tuple(table))
    zero_map = tuple(N.zero for _ in range(M.size))
    found.sort(key=lambda t: (t != zero_map, t))
    return found


@lru_cache(maxsize=None)
def hom_module(M: Semimodule, N: Semimodule) -> HomModule:
    tables = linear_maps(M, N)
    k = len(tables)
    pos = {t: i for i, t in enumerate(tables)}
    add = freeze_table([[pos[tuple(N.add[a][b] for a, b in zip(t, u))] for u in tables]
                        for t in tables])
    labels = tuple("h" + "".join(str(v) for v in t) for t in tables)
    primary = None
    second = None
    if M.second is not None:
        # (s.f)(x) = f(x.s) flips the side of the acting semiring
        T = M.second.semiring
        side = LEFT if M.second.side == RIGHT else RIGHT
        table = freeze_table([[pos[tuple(t[M.second.table[x][s]] for x in range(M.size))]
                               for s in range(T.size)] for t in tables])
        primary = (T, side, table)
    if N.second is not None:
        T = N.second.semiring
        side = N.second.side
        table = freeze_table([[pos[tuple(N.second.table[v][s] for v in t)]
                               for s in range(T.size)] for t in tables])
        if primary is None:
            primary = (T, side, table)
        else:
            second = SecondAction(T, side, table)
    if primary is None:
        S = counting_semiring_for(M.semiring)
        table = []
        for i in range(k):
            row = []
            cur = 0
            for _ in range(S.size):
                row.append(cur)
                cur = add[cur][i]
            table.append(row)
        primary = (S, RIGHT, freeze_table(table))
    mod = build_semimodule(primary[0], primary[1], labels, add, 0, primary[2], second)
    maps = tuple(build_morphism(M, N, t) for t in tables)
    return HomModule(M, N, mod, maps)


def hom_postcompose(G: Semimodule, f: Morphism) -> Morphism:
    """Hom(G, source f) -> Hom(G, target f) by postcomposition."""
    H1 = hom_module(G, f.source)
    H2 = hom_module(G, f.target)
    mapping = tuple(H2.index_of(tuple(f.map[v] for v in m.map)) for m in H1.maps)
    return build_morphism(H1.module, H2.module, mapping)


def hom_precompose(f: Morphism, G: Semimodule) -> Morphism:
    """Hom(target f, G) -> Hom(source f, G) by precomposition."""
    H1 = hom_module(f.target, G)
    H2 = hom_module(f.source, G)
    mapping = tuple(H2.index_of(tuple(m.map[v] for v in f.map)) for m in H1.maps)
    return build_morphism(H1.module, H2.module, mapping)


def evaluation_iso(S_module: Semimodule, M: Semimodule) -> Morphism | None:
    """Hom(S, M) -> M by evaluation at 1, as a monoid map; None when not bijective."""
    H = hom_module(S_module, M)
    one = S_module.semiring.one
    mapping = tuple(m.map[one] for m in H.maps)
    if len(set(mapping)) != M.size or len(mapping) != M.size:
        return None
    return monoid_morphism(H.module, M, mapping)


# ---------------------------------------------------------------------------
# Endomorphisms, complemented idempotents, retracts, direct summands.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EndReport:
    hom: HomModule
    semiring: Semiring | None
    identity: int
    comp: tuple[int, ...]
    summands: tuple[tuple[int, ...], ...]
    retracts: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def end_comp(M: Semimodule) -> EndReport:
    """End(M) with its complemented elements and the direct summands."""
    H = hom_module(M, M)
    tables = [m.map for m in H.maps]
    k = len(tables)
    pos = {t: i for i, t in enumerate(tables)}
    ident = pos[tuple(range(M.size))]
    add = [[pos[tuple(M.add[a][b] for a, b in zip(t, u))] for u in tables] for t in tables]
    mul = [[pos[tuple(t[v] for v in u)] for u in tables] for t in tables]
    semiring = None
    if k > 1:
        semiring = build_semiring([f"e{i}" for i in range(k)], add, mul, 0, ident)
    comp = []
    for i in range(k):
        for j in range(k):
            if add[i][j] == ident and mul[i][j] == 0 and mul[j][i] == 0:
                comp.append(i)
                break
    summands = sorted({tuple(sorted(set(tables[i]))) for i in comp})
    idem = [i for i in range(k) if mul[i][i] == i]
    retracts = sorted({tuple(sorted(set(tables[i]))) for i in idem})
    return EndReport(H, semiring, ident, tuple(comp), tuple(summands), tuple(retracts))


def is_retract_of(N: Semimodule, M: Semimodule) -> tuple[Morphism, Morphism] | None:
    """A section/retraction pair (into M, back onto N) when one exists."""
    into = hom_module(N, M)
    back = hom_module(M, N)
    ident = tuple(range(N.size))
    for psi in into.maps:
        if not psi.injective:
            continue
        for theta in back.maps:
            if tuple(theta.map[v] for v in psi.map) == ident:
                return psi, theta
    return None


# ---------------------------------------------------------------------------
# Relative injectivity and cogenerators.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InjectivityEntry:
    module_index: int
    sub_members: tuple[int, ...]
    surjective: bool
    uniform: bool


@dataclass(frozen=True)
class InjectivityReport:
    entries: tuple[InjectivityEntry, ...]

    @property
    def holds(self) -> bool:
        return all(e.surjective and e.uniform for e in self.entries)


def uniformly_injective_rel(Q: Semimodule, family) -> InjectivityReport:
    """Check Hom(M,Q) -> Hom(U,Q) surjective and uniform for every uniform U <= M."""
    entries = []
    for mi, M in enumerate(family):
        for U in uniform_subsemimodules(M):
            sub, inc = submodule_of(M, U)
            res = hom_precompose(inc, Q)
            prof = morphism_profile(res)
            entries.append(InjectivityEntry(mi, U.members, res.surjective, prof.uniform))
    return InjectivityReport(tuple(entries))


@dataclass(frozen=True)
class CogeneratorEntry:
    probe_index: int
    restriction_surjective: bool
    restriction_uniform: bool
    probe_injective: bool
    probe_uniform: bool

    @property
    def consistent(self) -> bool:
        if self.restriction_surjective and not self.probe_injective:
            return False
        if (self.restriction_surjective and self.restriction_uniform
                and not (self.probe_injective and self.probe_uniform)):
            return False
        return True


def uniformly_cogenerates(Q: Semimodule, probes) -> tuple[CogeneratorEntry, ...]:
    """Contrapositive cogenerator test over the supplied probe morphisms."""
    out = []
    for i, iota in enumerate(probes):
        res = hom_precompose(iota, Q)
        rprof = morphism_profile(res)
        pprof = morphism_profile(iota)
        out.append(CogeneratorEntry(i, res.surjective, rprof.uniform,
                                    iota.injective, pprof.uniform))
    return tuple(out)


# ---------------------------------------------------------------------------
# Diagram verifiers.
# ---------------------------------------------------------------------------

def _require_commutes(left: Morphism, right: Morphism, tag: str):
    if left.source != right.source or left.target != right.target:
        raise NotCommutative(tag, "path endpoints differ")
    for x in range(left.source.size):
        if left.map[x] != right.map[x]:
            raise NotCommutative((tag, x), "paths disagree")


@dataclass(frozen=True)
class RetractSquareReport:
    hypothesis: MorphismProfile
    conclusion: MorphismProfile

    @property
    def holds(self) -> bool:
        h, c = self.hypothesis, self.conclusion
        return ((not h.uniform or c.uniform)
                and (not h.k_uniform or c.k_uniform)
                and (not h.i_uniform or c.i_uniform))


def verify_retract_square(iota: Morphism, pi: Morphism, iota2: Morphism, pi2: Morphism,
                          gamma: Morphism, gamma_tilde: Morphism) -> RetractSquareReport:
    """Uniformity descends along compatible retract pairs."""
    ident = tuple(range(iota.source.size))
    if tuple(pi.map[v] for v in iota.map) != ident:
        raise NotCommutative("pi.iota", "not the identity")
    ident2 = tuple(range(iota2.source.size))
    if tuple(pi2.map[v] for v in iota2.map) != ident2:
        raise NotCommutative("pi2.iota2", "not the identity")
    _require_commutes(compose(iota2, gamma_tilde), compose(gamma, iota), "top square")
    _require_commutes(compose(pi2, gamma), compose(gamma_tilde, pi), "bottom square")
    return RetractSquareReport(morphism_profile(gamma), morphism_profile(gamma_tilde))


@dataclass(frozen=True)
class TwoRowReport:
    case_1a: bool | None
    case_1b: bool | None
    case_2a: bool | None
    case_2b: bool | None

    @property
    def holds(self) -> bool:
        return all(v is not False for v in (self.case_1a, self.case_1b,
                                            self.case_2a, self.case_2b))


def verify_two_row_diagram(f1: Morphism, g1: Morphism, f2: Morphism, g2: Morphism,
                           a1: Morphism, a2: Morphism, a3: Morphism,
                           cancellative_maps: bool = False) -> TwoRowReport:
    """Conclusions of the two-row diagram chase, case by case.

    Each case evaluates to True (hypotheses hold, conclusion holds), False
    (hypotheses hold, conclusion fails) or None (hypotheses not met).  The
    case needing cancellativity side conditions is only evaluated when the
    caller vouches for them.
    """
    _require_commutes(compose(a2, f1), compose(f2, a1), "left square")
    _require_commutes(compose(a3, g1), compose(g2, a2), "right square")
    stage2 = classify_stage(f2, g2)
    p1, p2, p3 = morphism_profile(a1), morphism_profile(a2), morphism_profile(a3)
    g1_prof = morphism_profile(g1)
    zero1 = all(g1.map[f1.map[x]] == g1.target.zero for x in range(f1.source.size))
    zero2 = all(g2.map[f2.map[x]] == g2.target.zero for x in range(f2.source.size))
    stage1 = classify_stage(f1, g1)

    case_1a = case_1b = case_2a = case_2b = None
    if stage2.quasi_exact and g1.surjective and a1.surjective:
        if zero1 and a2.injective:
            case_1a = a3.injective
        if a3.surjective:
            case_1b = p2.semi_epi and (not p2.i_uniform or a2.surjective)
    if stage1.semi_exact and f2.injective:
        if cancellative_maps and g1_prof.k_uniform and a1.injective and a3.injective:
            case_2a = a2.injective
        ker_a3 = all(a3.map[x] != a3.target.zero
                     for x in range(a3.source.size) if x != a3.source.zero)
        if zero2 and ker_a3 and a2.surjective:
            f1_prof = morphism_profile(f1)
            ok = p1.semi_epi
            if p1.i_uniform or f1_prof.i_uniform:
                ok = ok and a1.surjective
            case_2b = ok
    return TwoRowReport(case_1a, case_1b, case_2a, case_2b)
