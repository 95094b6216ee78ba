from __future__ import annotations

import pytest

from semiflat.catalog import (free_module, semiring_module, suite_pool,
                              suite_semirings, trivial_module, zmod_module)
from semiflat.congruence import quotient_by_sub
from semiflat.errors import NotCommutative
from semiflat.homology import (classify_sequence, classify_stage, cokernel,
                               end_comp, evaluation_iso, hom_module,
                               hom_postcompose, hom_precompose,
                               is_retract_of, kernel, morphism_profile,
                               uniformly_cogenerates, uniformly_injective_rel,
                               verify_retract_square, verify_two_row_diagram,
                               with_zero_ends)
from semiflat.structures import (build_morphism, compose, identity_morphism,
                                 isomorphic, zero_morphism)
from semiflat.subsets import submodule_of, subsemimodule


@pytest.fixture(scope="module")
def sat_setup(S3m):
    sub, inc = submodule_of(S3m, subsemimodule(S3m, (0, 3)))
    g = build_morphism(S3m, sub, [0, 1, 1, 1])
    return sub, inc, g


def test_kernel_of_identity(Z4m):
    assert kernel(identity_morphism(Z4m)).members == (0,)


def test_cokernel_of_identity(Z4m):
    Q, _ = cokernel(identity_morphism(Z4m))
    assert Q.size == 1


def test_kernel_of_collapse(sat_setup):
    _, _, g = sat_setup
    assert kernel(g).members == (0,)


def test_cokernel_of_inclusion(Z4m, Z2):
    sub, inc = submodule_of(Z4m, subsemimodule(Z4m, (0, 2)))
    Q, _ = cokernel(inc)
    assert isomorphic(Q, zmod_module(4, 2), monoid_only=True)


def test_projection_profile(S3m):
    _, pi = quotient_by_sub(S3m, subsemimodule(S3m, (0, 3)))
    prof = morphism_profile(pi)
    assert prof.uniform and pi.surjective


def test_collapse_is_not_k_uniform(sat_setup):
    _, _, g = sat_setup
    prof = morphism_profile(g)
    assert not prof.k_uniform and prof.k_witness == (1, 2)


def test_inclusion_is_not_i_uniform(sat_setup):
    _, inc, _ = sat_setup
    prof = morphism_profile(inc)
    assert not prof.i_uniform and prof.semi_epi


def test_injective_implies_k_uniform():
    for S in suite_semirings():
        for _, M in suite_pool(S):
            for _, N in suite_pool(S):
                for f in hom_module(M, N).maps:
                    prof = morphism_profile(f)
                    if f.injective:
                        assert prof.k_uniform
                    assert prof.uniform == (prof.k_uniform and prof.i_uniform)


def test_stage_flag_lattice_over_pools():
    # exact => quasi => semi; exact => proper => semi, over every stage
    for S in suite_semirings():
        pool = [m for _, m in suite_pool(S)]
        for A in pool:
            for B in pool:
                for C in pool:
                    for f in hom_module(A, B).maps:
                        for g in hom_module(B, C).maps:
                            st = classify_stage(f, g)
                            if st.exact:
                                assert st.quasi_exact and st.proper_exact
                            if st.quasi_exact or st.proper_exact:
                                assert st.semi_exact
                            if st.proper_exact or st.semi_exact:
                                assert st.chain_step


def test_classifier_on_canonical_quotient(Z4m):
    U = subsemimodule(Z4m, (0, 2))
    sub, inc = submodule_of(Z4m, U)
    Q, pi = quotient_by_sub(Z4m, U)
    report = classify_sequence(with_zero_ends([inc, pi]))
    assert report.exact


def test_classifier_flag_lattice(sat_setup, S3m, S3):
    _, inc, _ = sat_setup
    z = zero_morphism(S3m, trivial_module(S3))
    st = classify_stage(inc, z)
    assert st.semi_exact and st.quasi_exact
    assert not st.proper_exact and not st.exact


def test_identity_sequence_exact(Z4m, Z4):
    z1 = zero_morphism(trivial_module(Z4), Z4m)
    z2 = zero_morphism(Z4m, trivial_module(Z4))
    report = classify_sequence([z1, identity_morphism(Z4m), z2])
    assert report.exact


def test_hom_bool(Bm):
    H = hom_module(Bm, Bm)
    assert len(H.maps) == 2


def test_hom_free_rank_one_is_evaluation(S3m):
    ev = evaluation_iso(semiring_module(S3m.semiring), S3m)
    assert ev is not None and ev.injective and ev.surjective


def test_hom_from_trivial(Z4, Z4m):
    H = hom_module(trivial_module(Z4), Z4m)
    assert len(H.maps) == 1


def test_hom_functoriality(Z4m, Z2):
    f = build_morphism(Z4m, Z2, [0, 1, 0, 1])
    post = hom_postcompose(Z4m, f)
    pre = hom_precompose(f, Z2)
    assert post.source.size == len(hom_module(Z4m, Z4m).maps)
    assert pre.injective  # precomposition with a surjection is injective


def test_end_comp_bool(Bm):
    er = end_comp(Bm)
    assert len(er.hom.maps) == 2
    assert er.comp == (0, 1)
    assert er.summands == ((0,), (0, 1))


def test_end_comp_trivial(Z4):
    er = end_comp(trivial_module(Z4))
    assert er.comp == (0,) and er.semiring is None


def test_retract_of_direct_sum(Bm, B):
    B2 = free_module(B, 2)
    pair = is_retract_of(Bm, B2)
    assert pair is not None
    psi, theta = pair
    assert compose(theta, psi).map == (0, 1)


def test_summands_are_retracts():
    for S in suite_semirings():
        M = free_module(S, 2)
        er = end_comp(M)
        for members in er.summands:
            sub, _ = submodule_of(M, subsemimodule(M, members))
            assert is_retract_of(sub, M) is not None


def test_trivial_uniformly_injective(B, Bm):
    rep = uniformly_injective_rel(trivial_module(B), [Bm, free_module(B, 2)])
    assert rep.holds


def test_z2_uniformly_injective_rel_itself():
    from semiflat.catalog import zmod_semiring, semiring_module
    Z2S = zmod_semiring(2)
    M = semiring_module(Z2S)
    rep = uniformly_injective_rel(M, [M])
    assert rep.holds


def test_cogenerator_probe_consistency(Bm, B):
    B2 = free_module(B, 2)
    probes = [m for m in hom_module(Bm, B2).maps]
    entries = uniformly_cogenerates(B2, probes)
    for e in entries:
        if e.restriction_surjective and e.restriction_uniform:
            assert e.probe_injective and e.probe_uniform or not e.consistent


def test_retract_square_requires_commutation(Bm):
    ident = identity_morphism(Bm)
    z = zero_morphism(Bm, Bm)
    with pytest.raises(NotCommutative):
        verify_retract_square(z, ident, ident, ident, ident, ident)


def test_degenerate_diagram_holds(Z4, Z4m):
    T = trivial_module(Z4)
    zt = zero_morphism(T, T)
    rep = verify_two_row_diagram(zt, zt, zt, zt, zt, zt, zt)
    assert rep.holds


def test_two_row_instance(Z4m, Z2, Z4):
    # quasi-exact bottom row built from the canonical quotient
    U = subsemimodule(Z4m, (0, 2))
    sub, inc = submodule_of(Z4m, U)
    Q, pi = quotient_by_sub(Z4m, U)
    ident = identity_morphism
    rep = verify_two_row_diagram(inc, pi, inc, pi,
                                 ident(sub), ident(Z4m), ident(Q))
    assert rep.holds and rep.case_1a is True
