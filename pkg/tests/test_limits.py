from __future__ import annotations

import pytest

from semiflat.catalog import trivial_module
from semiflat.errors import NotDirected, NotIntertwining, ShapeMismatch
from semiflat.homology import classify_sequence, morphism_profile, with_zero_ends
from semiflat.limits import (chain_system, coequalizer, colimit_morphism,
                             constant_system, copairing, direct_sum,
                             directed_colimit, directed_system, equalizer,
                             hom_colimit_comparison, inverse_limit,
                             inverse_system, pairing, product, pullback,
                             pullback_mediator, subsemimodule_system)
from semiflat.structures import (build_morphism, compose, identity_morphism,
                                 isomorphic, zero_morphism)
from semiflat.subsets import submodule_of, subsemimodule


def test_direct_sum_bool(Bm):
    data = direct_sum((Bm, Bm))
    assert data.module.size == 4
    for inj in data.injections:
        assert inj.injective
    for proj in data.projections:
        assert proj.surjective


def test_pairing_factors(Z4m, Z2):
    f = build_morphism(Z4m, Z2, [0, 1, 0, 1])
    g = build_morphism(Z4m, Z2, [0, 1, 0, 1])
    data = direct_sum((Z2, Z2))
    h = pairing([f, g], data)
    assert compose(data.projections[0], h).map == f.map
    assert compose(data.projections[1], h).map == g.map


def test_copairing_factors(Z4m, Z2):
    f = build_morphism(Z2, Z4m, [0, 2])
    data = direct_sum((Z2, Z2))
    h = copairing([f, f], data)
    assert compose(h, data.injections[0]).map == f.map


def test_equalizer_coequalizer_of_identity(Z4m):
    ident = identity_morphism(Z4m)
    E, inc = equalizer(ident, ident)
    assert E.size == Z4m.size
    Q, pi = coequalizer(ident, ident)
    assert Q.size == Z4m.size


def test_pullback_over_trivial_is_product(Bm, B):
    T = trivial_module(B)
    z = zero_morphism(Bm, T)
    P, p1, p2, data, inc = pullback(z, z)
    assert P.size == Bm.size * Bm.size


def test_pullback_mediator(Z4m, Z2):
    f = build_morphism(Z4m, Z2, [0, 1, 0, 1])
    P, p1, p2, data, inc = pullback(f, f)
    u = identity_morphism(Z4m)
    med = pullback_mediator(P, inc, data, u, u)
    assert compose(p1, med).map == u.map


def test_coequalizer_matches_congruence_oracle(Z4m):
    from semiflat.congruence import module_congruence_closure
    f = identity_morphism(Z4m)
    g = build_morphism(Z4m, Z4m, [0, 3, 2, 1])
    Q, pi = coequalizer(f, g)
    cong = module_congruence_closure(Z4m, [(x, g.map[x]) for x in range(4)])
    assert Q.size == cong.class_count


def test_constant_colimit(Bm):
    sys = constant_system(Bm, 3)
    colim = directed_colimit(sys)
    assert isomorphic(colim.module, Bm)
    for leg in colim.legs:
        assert leg.surjective


def test_chain_colimit(Z4m, Z2):
    f = build_morphism(Z4m, Z2, [0, 1, 0, 1])
    sys = chain_system([f, identity_morphism(Z2)])
    colim = directed_colimit(sys)
    assert isomorphic(colim.module, Z2)


def test_not_directed_rejected(Bm, Z4m):
    with pytest.raises(NotDirected):
        directed_system([Bm, Bm], [(0, 1), (1, 0)],
                        [identity_morphism(Bm), identity_morphism(Bm)])


def test_colimit_morphism_identity(Z4m):
    sys = constant_system(Z4m, 2)
    h = colimit_morphism(sys, sys, [identity_morphism(Z4m)] * 2)
    assert h.map == tuple(range(h.source.size))


def test_colimit_morphism_transfers_flags(Z4m, Z2):
    f = build_morphism(Z4m, Z2, [0, 1, 0, 1])
    sysX = constant_system(Z4m, 2)
    sysY = constant_system(Z2, 2)
    h = colimit_morphism(sysX, sysY, [f, f])
    assert h.surjective == f.surjective
    assert morphism_profile(h).uniform == morphism_profile(f).uniform


def test_intertwining_required(Z4m):
    neg = build_morphism(Z4m, Z4m, [0, 3, 2, 1])
    sysX = chain_system([neg])
    sysY = chain_system([identity_morphism(Z4m)])
    with pytest.raises(NotIntertwining):
        colimit_morphism(sysX, sysY, [identity_morphism(Z4m)] * 2)


def test_levelwise_exact_colimit(Z4m, Z4):
    U = subsemimodule(Z4m, (0, 2))
    sub, inc = submodule_of(Z4m, U)
    from semiflat.congruence import quotient_by_sub
    Q, pi = quotient_by_sub(Z4m, U)
    alpha = colimit_morphism(constant_system(sub, 2), constant_system(Z4m, 2),
                             [inc, inc])
    beta = colimit_morphism(constant_system(Z4m, 2), constant_system(Q, 2),
                            [pi, pi])
    assert classify_sequence(with_zero_ends([alpha, beta])).exact


def test_inverse_limit_shapes(Bm):
    sys = inverse_system([Bm, Bm], [(0, 1)], [identity_morphism(Bm)])
    L, projs = inverse_limit(sys)
    assert L.size == Bm.size
    sys2 = inverse_system([Bm, Bm], [], [])
    L2, _ = inverse_limit(sys2)
    assert L2.size == Bm.size ** 2


def test_inverse_limit_with_zero_map(Z4m, Z4):
    T = trivial_module(Z4)
    sys = inverse_system([T, Z4m], [(0, 1)], [zero_morphism(Z4m, T)])
    L, _ = inverse_limit(sys)
    assert L.size == Z4m.size  # every element is compatible with the zero map


def test_psi_bijective_on_chain(Z4m, Z2):
    f = build_morphism(Z4m, Z2, [0, 1, 0, 1])
    sys = chain_system([f])
    for X in (Z4m, Z2):
        hc = hom_colimit_comparison(X, sys)
        assert hc.injective and hc.bijective


def test_module_is_colimit_of_subsemimodules(Z4m, S3m):
    for M in (Z4m, S3m):
        sys, comparison = subsemimodule_system(M)
        assert comparison.injective and comparison.surjective


def test_empty_product_is_terminal(Z4):
    P, projections = product((), semiring=Z4)
    assert P.size == 1 and projections == ()
    with pytest.raises(ShapeMismatch):
        product(())
