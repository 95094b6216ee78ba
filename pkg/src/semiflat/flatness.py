"""Flatness predicates, their reduction checks, and the search harness.

Uniform flatness of F against M quantifies over the subtractive
subsemimodules U of M: the induced map F(x)U -> F(x)M must be injective
and i-uniform for each.  The equivalent formulation through tensored
short exact sequences is recomputed alongside and any disagreement is
raised, never silently resolved.  Mono-flatness quantifies injectivity
over all subsemimodules; membership in the i-uniformity class quantifies
i-uniformity over the subtractive ones.

Genuine flatness (colimit-of-projectives) is handled through explicit
certificates: checking is sound at finite scale, deciding is not.
"""
from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass
from functools import lru_cache

from .catalog import free_module
from .config import DEFAULT_BOUNDS
from .congruence import quotient_by_sub
from .errors import BadCertificate, NotExact, SizeBoundExceeded, TimeBudgetExceeded
from .homology import (classify_sequence, end_comp, hom_module, is_retract_of,
                       kernel, morphism_profile, uniformly_injective_rel,
                       with_zero_ends)
from .limits import (DirectedSystem, constant_system, direct_sum,
                     directed_colimit, pullback, pullback_mediator)
from .structures import (LEFT, Morphism, Semimodule, as_left, as_right,
                         build_morphism, compose, identity_morphism,
                         swap_actions, with_bimodule_structure)
from .subsets import (Subsemimodule, enumerate_subsemimodules, module_generators,
                      submodule_of, subsemimodule, uniform_subsemimodules)
from .tensor import tensor_morphisms, tensor_product


def as_left_morphism(f: Morphism) -> Morphism:
    return build_morphism(as_left(f.source), as_left(f.target), f.map)


@dataclass(frozen=True)
class FlatnessVerdict:
    holds: bool
    witness: tuple | None = None
    detail: str = ""


def _tensored_inclusion(F: Semimodule, M: Semimodule, U: Subsemimodule) -> Morphism:
    sub, inc = submodule_of(M, U)
    return tensor_morphisms(identity_morphism(F), as_left_morphism(inc))


@lru_cache(maxsize=None)
def is_uniformly_M_flat(F: Semimodule, M: Semimodule) -> FlatnessVerdict:
    """Subtractive-subsemimodule formulation, cross-checked against the
    tensored-sequence formulation per subsemimodule."""
    M = as_right(M)
    for U in uniform_subsemimodules(M):
        induced = _tensored_inclusion(F, M, U)
        prof = morphism_profile(induced)
        ok = induced.injective and prof.i_uniform
        seq_ok = _tensored_sequence_exact(F, M, U)
        if ok != seq_ok:
            raise NotExact(
                f"subsemimodule and sequence formulations disagree at U={U.members}")
        if not ok:
            kind = "not-injective" if not induced.injective else "image-not-closed"
            return FlatnessVerdict(False, (U.members, kind))
    return FlatnessVerdict(True)


def _tensored_sequence_exact(F: Semimodule, M: Semimodule, U: Subsemimodule) -> bool:
    sub, inc = submodule_of(M, U)
    Q, pi = quotient_by_sub(M, U)
    t_inc = tensor_morphisms(identity_morphism(F), as_left_morphism(inc))
    t_pi = tensor_morphisms(identity_morphism(F), as_left_morphism(pi))
    report = classify_sequence(with_zero_ends([t_inc, t_pi]))
    return report.exact


def is_uniformly_flat(F: Semimodule, universe) -> FlatnessVerdict:
    """Conjunction over an explicit finite universe of test modules."""
    for i, M in enumerate(universe):
        v = is_uniformly_M_flat(F, M)
        if not v.holds:
            return FlatnessVerdict(False, (i,) + v.witness, "relative to universe")
    return FlatnessVerdict(True, None, "relative to universe")


@lru_cache(maxsize=None)
def is_mono_flat(F: Semimodule, M: Semimodule) -> FlatnessVerdict:
    """Injectivity of F(x)L -> F(x)M for every subsemimodule L."""
    M = as_right(M)
    for L in enumerate_subsemimodules(M):
        induced = _tensored_inclusion(F, M, L)
        if not induced.injective:
            return FlatnessVerdict(False, (L.members, "not-injective"))
    return FlatnessVerdict(True)


@lru_cache(maxsize=None)
def in_i_uniform_class(F: Semimodule, M: Semimodule) -> FlatnessVerdict:
    """i-uniformity of F(x)U -> F(x)M for every subtractive U."""
    M = as_right(M)
    for U in uniform_subsemimodules(M):
        induced = _tensored_inclusion(F, M, U)
        if not morphism_profile(induced).i_uniform:
            return FlatnessVerdict(False, (U.members, "image-not-closed"))
    return FlatnessVerdict(True)


def flatness_flags(F: Semimodule, M: Semimodule) -> dict:
    """The three relative predicates plus the implication cross-check."""
    mono = is_mono_flat(F, M)
    iu = in_i_uniform_class(F, M)
    uf = is_uniformly_M_flat(F, M)
    if mono.holds and iu.holds and not uf.holds:
        raise NotExact("mono-flat + i-uniform class must imply uniform flatness")
    return {"mono_flat": mono, "i_uniform_class": iu, "uniformly_flat": uf}


def fg_reduction_check(F: Semimodule, M: Semimodule) -> dict:
    """Finitely generated reduction: with F in the i-uniformity class,
    uniform M-flatness coincides with injectivity over all (finitely
    generated, here: all) subsemimodules."""
    iu = in_i_uniform_class(F, M)
    if not iu.holds:
        return {"applicable": False}
    mono = is_mono_flat(F, M)
    uf = is_uniformly_M_flat(F, M)
    if mono.holds != uf.holds:
        raise NotExact("fg reduction failed: predicates disagree")
    return {"applicable": True, "agree": True, "value": uf.holds}


def middle_flat_transfer(F: Semimodule, inc: Morphism, pi: Morphism) -> dict:
    """Transfer of flatness along a short exact sequence M1 -> M -> M2."""
    report = classify_sequence(with_zero_ends([inc, pi]))
    if not report.exact:
        raise NotExact("middle flatness transfer needs a short exact sequence")
    M1, M, M2 = inc.source, inc.target, pi.target
    out = {"middle": is_uniformly_M_flat(F, M).holds}
    if out["middle"]:
        out["sub"] = is_uniformly_M_flat(F, M1).holds
        if not out["sub"]:
            raise NotExact("flatness did not transfer to the subsemimodule")
        if in_i_uniform_class(F, M2).holds:
            out["quotient"] = is_uniformly_M_flat(F, M2).holds
            if not out["quotient"]:
                raise NotExact("flatness did not transfer to the quotient")
    return out


def sum_retract_suite(family, M: Semimodule) -> dict:
    """Direct sums and retracts inherit and reflect uniform flatness."""
    family = tuple(family)
    data = direct_sum(family)
    each = [is_uniformly_M_flat(F, M).holds for F in family]
    total = is_uniformly_M_flat(data.module, M).holds
    if total != all(each):
        raise NotExact("sum flatness must match the conjunction of the parts")
    out = {"sum": total, "parts": each, "retracts": []}
    if total:
        er = end_comp(data.module)
        for members in er.retracts:
            sub, _ = submodule_of(data.module, subsemimodule(data.module, members))
            v = is_uniformly_M_flat(sub, M).holds
            out["retracts"].append((members, v))
            if not v:
                raise NotExact("a retract of a flat module failed flatness")
    return out


# ---------------------------------------------------------------------------
# Uniformly finitely generated / presented.
# ---------------------------------------------------------------------------

def _free_maps(X: Semimodule, n: int):
    """(map table, images) for every linear map from the free left module of rank n."""
    S = X.semiring
    free = free_module(S, n, LEFT)
    tuples = list(itertools.product(range(S.size), repeat=n))
    for images in itertools.product(range(X.size), repeat=n):
        table = []
        for t in tuples:
            val = X.zero
            for s, x in zip(t, images):
                val = X.add[val][X.action[x][s]]
            table.append(val)
        yield free, tuple(table), images


def is_uniformly_fg(X: Semimodule, n_max: int = DEFAULT_BOUNDS.max_free_rank):
    """A uniform surjection from a finite free module, or None."""
    X = as_left(X)
    for n in range(1, n_max + 1):
        if X.semiring.size ** n > DEFAULT_BOUNDS.max_product:
            raise SizeBoundExceeded("free cover", X.semiring.size ** n,
                                    DEFAULT_BOUNDS.max_product)
        for free, table, images in _free_maps(X, n):
            if len(set(table)) != X.size:
                continue
            f = build_morphism(free, X, table)
            if morphism_profile(f).uniform:
                return {"rank": n, "images": images, "map": f}
    return None


def is_uniformly_fp(X: Semimodule, n_max: int = DEFAULT_BOUNDS.max_free_rank):
    """Uniform finite presentation data: every uniform free cover found is
    extended to a two-step presentation with its exactness certificate."""
    X = as_left(X)
    witness = is_uniformly_fg(X, n_max)
    if witness is None:
        return None
    presentations = []
    for n in range(1, n_max + 1):
        for free, table, images in _free_maps(X, n):
            if len(set(table)) != X.size:
                continue
            g = build_morphism(free, X, table)
            if not morphism_profile(g).uniform:
                continue
            K = kernel(g)
            ker_mod, ker_inc = submodule_of(free, K)
            gens = module_generators(ker_mod)
            m = max(1, len(gens))
            cover = free_module(X.semiring, m, LEFT)
            tuples = list(itertools.product(range(X.semiring.size), repeat=m))
            gen_images = [ker_inc.map[g_] for g_ in gens] or [free.zero]
            tbl = []
            for t in tuples:
                val = free.zero
                for s, x in zip(t, gen_images):
                    val = free.add[val][free.action[x][s]]
                tbl.append(val)
            f_tilde = build_morphism(cover, free, tbl)
            report = classify_sequence([f_tilde, g])
            if not (report.stages[0].semi_exact and report.stages[0].proper_exact):
                raise NotExact("presentation middle stage must be proper exact")
            presentations.append({"rank": n, "kernel_rank": m,
                                  "kernel": K.members, "exact": report})
    return {"witness": witness, "presentations": presentations}


# ---------------------------------------------------------------------------
# Certificates for genuine (colimit-of-projectives) flatness.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FlatCertificate:
    system: DirectedSystem
    node_witnesses: tuple[tuple[Morphism, Morphism], ...]   # (into free, back)
    iso: Morphism                                           # colimit -> subject


def projectivity_witness(F: Semimodule, n_max: int = DEFAULT_BOUNDS.max_free_rank):
    """A retract-of-free pair for F, searched by rank."""
    for n in range(1, n_max + 1):
        free = free_module(F.semiring, n, F.side)
        if free.size > DEFAULT_BOUNDS.max_product:
            break
        pair = is_retract_of(F, free)
        if pair is not None:
            return {"rank": n, "section": pair[0], "retraction": pair[1]}
    return None


def trivial_certificate(F: Semimodule, n_max: int = DEFAULT_BOUNDS.max_free_rank):
    """Constant-system certificate for a module that is itself projective."""
    wit = projectivity_witness(F, n_max)
    if wit is None:
        return None
    sys = constant_system(F, 2)
    colim = directed_colimit(sys)
    iso = build_morphism(colim.module, F,
                         tuple(_colim_value(colim, x) for x in range(colim.module.size)))
    pair = (wit["section"], wit["retraction"])
    return FlatCertificate(sys, (pair, pair), iso)


def _colim_value(colim, cls: int) -> int:
    for j, row in enumerate(colim.class_of):
        for x, c in enumerate(row):
            if c == cls:
                return x
    raise ValueError("empty colimit class")


def flat_certificate_check(F: Semimodule, cert: FlatCertificate, universe,
                           pullback_battery=()) -> dict:
    """Verify the certificate, then the flatness consequences it implies."""
    for j, (node, (psi, theta)) in enumerate(zip(cert.system.nodes, cert.node_witnesses)):
        if psi.source != node or theta.target != node:
            raise BadCertificate(j, "witness endpoints do not match the node")
        if theta.source != psi.target:
            raise BadCertificate(j, "section and retraction do not compose")
        composite = compose(theta, psi)
        if composite.map != tuple(range(node.size)):
            raise BadCertificate(j, "section followed by retraction is not the identity")
    colim = directed_colimit(cert.system)
    if cert.iso.source != colim.module or cert.iso.target != F:
        raise BadCertificate("iso", "isomorphism endpoints are wrong")
    if not (cert.iso.injective and cert.iso.surjective):
        raise BadCertificate("iso", "colimit comparison is not bijective")
    flat = is_uniformly_flat(F, universe)
    if not flat.holds:
        raise BadCertificate("flatness", f"certified module failed at {flat.witness}")
    battery_results = []
    for f, g in pullback_battery:
        battery_results.append(_pullback_preserved(F, f, g))
        if not battery_results[-1]:
            raise BadCertificate("pullback", "tensoring did not preserve a pullback square")
    return {"flat": True, "pullbacks": battery_results}


def _pullback_preserved(F: Semimodule, f: Morphism, g: Morphism) -> bool:
    fL, gL = as_left_morphism(f), as_left_morphism(g)
    P, p1, p2, data, inc = pullback(fL, gL)
    idF = identity_morphism(F)
    tP = tensor_product(F, P)
    t_p1 = tensor_morphisms(idF, p1)
    t_p2 = tensor_morphisms(idF, p2)
    t_f = tensor_morphisms(idF, fL)
    t_g = tensor_morphisms(idF, gL)
    P2, q1, q2, data2, inc2 = pullback(t_f, t_g)
    mediator = pullback_mediator(P2, inc2, data2, t_p1, t_p2)
    return mediator.injective and mediator.surjective


# ---------------------------------------------------------------------------
# Ideal-wise criterion.
# ---------------------------------------------------------------------------

def baer_ideal_criterion(F: Semimodule, Q: Semimodule, universe) -> dict:
    """Three verdicts side by side; no equivalence is asserted."""
    from .catalog import semiring_module
    S = F.semiring
    SM = semiring_module(S)
    ideal_wise = True
    ideal_witness = None
    for I in uniform_subsemimodules(SM):
        induced = _tensored_inclusion(F, SM, I)
        if not (induced.injective and morphism_profile(induced).i_uniform):
            ideal_wise, ideal_witness = False, I.members
            break
    flat = is_uniformly_flat(F, universe)
    F_bi = swap_actions(with_bimodule_structure(as_right(F)))
    HFQ = hom_module(F_bi, as_left(Q) if Q.side != F_bi.side else Q)
    inj = uniformly_injective_rel(HFQ.module, tuple(as_left(M) if M.side != HFQ.module.side
                                                   else M for M in universe))
    return {"ideal_wise": ideal_wise, "ideal_witness": ideal_witness,
            "uniformly_flat": flat.holds, "hom_uniformly_injective": inj.holds}


# ---------------------------------------------------------------------------
# Bridges between flatness and relative injectivity.
# ---------------------------------------------------------------------------

def _cogenerates_probes(X: Semimodule, probes) -> bool:
    """The contrapositive cogenerator test over an explicit probe family."""
    from .homology import uniformly_cogenerates
    entries = uniformly_cogenerates(X, probes)
    return all(e.consistent for e in entries)


def injectivity_flatness_bridge(F: Semimodule, M: Semimodule, X: Semimodule) -> dict:
    """Both directions of the hom/tensor duality on one triple.

    Forward: if F is uniformly M-flat and X is uniformly injective
    relative to F(x)M, then maps into X transported through F are
    uniformly M-injective.  Backward: if X cogenerates the tensored
    inclusion probes and the transported module is uniformly
    M-injective, F must be uniformly M-flat.  Returns the evaluated
    flags; raises when an implication is violated.
    """
    from .homology import hom_module
    F_bi = with_bimodule_structure(as_right(F))
    M_left = as_left(M)
    X_left = as_left(X)
    FM = tensor_product(F_bi, M_left).module
    hom_FX = hom_module(swap_actions(F_bi), X_left)
    flat = is_uniformly_M_flat(F, M).holds
    x_inj = uniformly_injective_rel(X_left, (FM,)).holds
    hom_inj = uniformly_injective_rel(hom_FX.module, (M_left,)).holds
    M_right = as_right(M)
    probes = [_typed_tensored_inclusion(F_bi, M_right, U)
              for U in uniform_subsemimodules(M_right)]
    cogenerated = _cogenerates_probes(X_left, probes)
    if flat and x_inj and not hom_inj:
        raise NotExact("flat + relatively injective must transport injectivity")
    if cogenerated and hom_inj and not flat:
        raise NotExact("cogenerated + transported injectivity must force flatness")
    return {"flat": flat, "target_injective": x_inj,
            "hom_injective": hom_inj, "cogenerated": cogenerated}


def _typed_tensored_inclusion(F_bi: Semimodule, M_right: Semimodule, U) -> Morphism:
    """F(x)U -> F(x)M as left modules, using the synthesized left action."""
    sub, inc = submodule_of(M_right, U)
    return tensor_morphisms(identity_morphism(F_bi), as_left_morphism(inc))


def injective_cogenerator_equivalence(Q: Semimodule, universe) -> dict:
    """Flatness against a certified relative injective-cogenerator.

    When Q is uniformly injective relative to the universe and uniformly
    cogenerates every tensored inclusion probe assembled from it,
    uniform flatness of each F in the universe must match uniform
    injectivity of the transported module Hom(F, Q); certification
    failures make the result inconclusive, never a verdict.
    """
    from .homology import hom_module
    Q_left = as_left(Q)
    family = tuple(as_left(M) for M in universe)
    injective = uniformly_injective_rel(Q_left, family).holds
    cogenerates = True
    for F in universe:
        F_bi = with_bimodule_structure(as_right(F))
        for M in universe:
            M_right = as_right(M)
            probes = [_typed_tensored_inclusion(F_bi, M_right, U)
                      for U in uniform_subsemimodules(M_right)]
            if not _cogenerates_probes(Q_left, probes):
                cogenerates = False
                break
        if not cogenerates:
            break
    out = {"certified": injective and cogenerates, "instances": []}
    if not out["certified"]:
        return out
    for F in universe:
        F_bi = with_bimodule_structure(as_right(F))
        hom_FQ = hom_module(swap_actions(F_bi), Q_left)
        flat = is_uniformly_flat(as_right(F), tuple(as_right(M) for M in universe)).holds
        hom_inj = uniformly_injective_rel(hom_FQ.module, family).holds
        out["instances"].append((flat, hom_inj))
        if flat != hom_inj:
            raise NotExact("flatness and transported injectivity must agree "
                           "against a certified cogenerator")
    return out


def fg_subsemimodule_reduction(F: Semimodule, universe) -> bool:
    """If every subsemimodule of F is uniformly flat, so is F."""
    F = as_right(F)
    all_subs_flat = True
    for L in enumerate_subsemimodules(F):
        sub, _ = submodule_of(F, L)
        if not is_uniformly_flat(sub, universe).holds:
            all_subs_flat = False
            break
    whole = is_uniformly_flat(F, universe).holds
    if all_subs_flat and not whole:
        raise NotExact("flatness of every subsemimodule must pass to the module")
    return whole


def colimit_flatness_transfer(system: DirectedSystem, M: Semimodule) -> bool:
    """Flatness of every node passes to the directed colimit."""
    each = [is_uniformly_M_flat(node, M).holds for node in system.nodes]
    colim = directed_colimit(system)
    whole = is_uniformly_M_flat(colim.module, M).holds
    if all(each) and not whole:
        raise NotExact("nodewise flatness must pass to the colimit")
    return whole


# ---------------------------------------------------------------------------
# The classification search harness.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchConfig:
    semirings: tuple
    max_size: int = 4
    budget_seconds: float = 300.0
    free_rank: int = DEFAULT_BOUNDS.max_free_rank
    out_path: str | None = None
    seed: int = 0


@dataclass
class SearchRecord:
    semiring_index: int
    module_index: int
    size: int
    add: tuple
    action: tuple
    mono_flat: bool
    i_uniform_class: bool
    uniformly_flat: bool
    certified_flat: bool
    witness: tuple | None

    def to_json(self) -> str:
        return json.dumps({
            "semiring": self.semiring_index,
            "module": self.module_index,
            "size": self.size,
            "add": self.add,
            "action": self.action,
            "flags": {
                "mono_flat": self.mono_flat,
                "i_uniform_class": self.i_uniform_class,
                "uniformly_flat": self.uniformly_flat,
                "certified_flat": self.certified_flat,
            },
            "witness": self.witness,
        }, sort_keys=True)


def search_counterexamples(config: SearchConfig) -> dict:
    """Classify enumerated modules; report candidates and lattice violations.

    A module that is uniformly flat relative to the enumerated universe but
    not certified flat within the rank bound is only a candidate: the
    verdicts are labeled inconclusive, never conclusions.
    """
    from .catalog import enumerate_semimodules
    t0 = time.monotonic()
    records: list[SearchRecord] = []
    inconclusive = []
    violations = []
    partial = False
    for si, S in enumerate(config.semirings):
        modules = enumerate_semimodules(S, config.max_size)
        universe = modules
        for mi, F in enumerate(modules):
            if time.monotonic() - t0 > config.budget_seconds:
                partial = True
                break
            mono = all(is_mono_flat(F, M).holds for M in universe)
            iu = all(in_i_uniform_class(F, M).holds for M in universe)
            flat = is_uniformly_flat(F, universe)
            certified = projectivity_witness(F, config.free_rank) is not None
            rec = SearchRecord(si, mi, F.size, F.add, F.action, mono, iu,
                               flat.holds, certified, flat.witness)
            records.append(rec)
            if mono and iu and not flat.holds:
                violations.append((si, mi, "mono+iuniform without uniform flatness"))
            if certified and not flat.holds:
                violations.append((si, mi, "certified flat but not uniformly flat"))
            if flat.holds and not certified:
                inconclusive.append((si, mi))
        if partial:
            break
    report = {
        "records": records,
        "uniformly_flat_not_certified": inconclusive,
        "lattice_violations": violations,
        "partial": partial,
        "elapsed": time.monotonic() - t0,
    }
    if config.out_path:
        with open(config.out_path, "w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(rec.to_json() + "\n")
    if partial:
        raise TimeBudgetExceeded(report)
    return report
