from __future__ import annotations

import pytest

from semiflat.catalog import (bool_semiring, cancellative_targets,
                              free_module, semiring_bimodule, semiring_module,
                              suite_pool, suite_semirings, trivial_module,
                              zmod_module)
from semiflat.errors import NotZeroPreserving, SideMismatch
from semiflat.structures import (as_left, build_morphism,
                                 find_monoid_isomorphism, identity_morphism,
                                 isomorphic, with_bimodule_structure,
                                 zero_morphism)
from semiflat.tensor import (adjunction_iso, associativity_iso,
                             certify_cancellative_universal, dual_comparison,
                             enumerate_balanced_maps, factor_balanced,
                             cancellative_tensor, tensor_morphisms,
                             tensor_product, unit_iso, unit_iso_left)


def test_unit_case_bool(Bm):
    pres = tensor_product(Bm, as_left(Bm))
    assert pres.module.size == 2
    assert isomorphic(pres.module, Bm, monoid_only=True)


def test_z2_tensor_z2_over_z4(Z2):
    pres = tensor_product(Z2, as_left(Z2))
    assert pres.module.size == 2
    dense = tensor_product(Z2, as_left(Z2), dense=True)
    assert find_monoid_isomorphism(pres.module.add, pres.module.zero,
                                   dense.module.add, dense.module.zero) is not None


def test_trivial_tensor(Z4, Z4m):
    T = trivial_module(Z4)
    assert tensor_product(T, as_left(Z4m)).module.size == 1
    assert tensor_product(Z4m, as_left(T)).module.size == 1


def test_side_checking(Bm):
    with pytest.raises(SideMismatch):
        tensor_product(Bm, Bm)  # right (x) right is rejected


def test_dense_presentation_agrees_on_pools():
    for S in suite_semirings():
        for _, M in suite_pool(S):
            for _, N in suite_pool(S):
                NL = as_left(N)
                try:
                    dense = tensor_product(M, NL, dense=True, max_box=2048)
                except Exception:
                    continue
                sparse = tensor_product(M, NL)
                assert find_monoid_isomorphism(
                    sparse.module.add, sparse.module.zero,
                    dense.module.add, dense.module.zero) is not None, \
                    f"presentations disagree for |M|={M.size} |N|={N.size}"


def test_order_bound_soundness(Z4m, S3m):
    for M in (Z4m, S3m):
        pres = tensor_product(M, as_left(M))
        pairs = pres.pair_list()
        for q, (g, h) in enumerate(pairs):
            i, p = pres.pair_bounds[q]
            base = pres.tau[g][h]
            add = pres.module.add
            acc = pres.module.zero
            seen = [acc]
            for _ in range(i + p):
                acc = add[acc][base]
                seen.append(acc)
            assert seen[i + p] == seen[i], "imposed order relation must hold"


def test_factor_balanced_unit(Z4m):
    pres, iso = unit_iso(Z4m)
    assert iso.valid


def test_factor_zero_map(Bm):
    pres = tensor_product(Bm, as_left(Bm))
    table = tuple(tuple(0 for _ in range(2)) for _ in range(2))
    gamma = factor_balanced(pres, Bm, table)
    assert all(g == 0 for g in gamma)


def test_factor_min_map(Bm):
    pres = tensor_product(Bm, as_left(Bm))
    table = tuple(tuple(min(a, b) for b in range(2)) for a in range(2))
    gamma = factor_balanced(pres, Bm, table)
    assert sorted(gamma) == [0, 1]


def test_unbalanced_table_rejected(Bm):
    pres = tensor_product(Bm, as_left(Bm))
    table = ((0, 1), (1, 1))  # violates zero preservation
    with pytest.raises(NotZeroPreserving):
        factor_balanced(pres, Bm, table)


def test_balanced_completeness_small_targets():
    # every zero-preserving balanced table into every commutative monoid of
    # size <= 3 factors through the pairing exactly once, on all pool pairs
    from semiflat.structures import monoid_module, rehome_pair
    from semiflat.homology import hom_module
    from semiflat.catalog import enumerate_commutative_monoids
    targets = [monoid_module(t) for n in (1, 2, 3)
               for t in enumerate_commutative_monoids(n)]
    factored = 0
    for S in suite_semirings():
        for _, M in suite_pool(S):
            for _, N0 in suite_pool(S):
                N = as_left(N0)
                pres = tensor_product(M, N)
                for G in targets:
                    for table in enumerate_balanced_maps(M, N, G):
                        gamma = factor_balanced(pres, G, table)
                        T2, G2 = rehome_pair(pres.module, G)
                        H = hom_module(T2, G2)
                        matches = [h for h in H.maps
                                   if all(h.map[pres.tau[m][n]] == table[m][n]
                                          for m in range(M.size)
                                          for n in range(N.size))]
                        assert len(matches) == 1 and matches[0].map == tuple(gamma)
                        factored += 1
    assert factored > 100


def test_tensor_morphism_identity(Z2):
    t = tensor_morphisms(identity_morphism(Z2), identity_morphism(as_left(Z2)))
    assert t.map == tuple(range(t.source.size))


def test_tensor_morphism_zero(Z4m, Z2):
    zl = zero_morphism(Z2, Z2)
    t = tensor_morphisms(identity_morphism(Z4m), build_morphism(as_left(Z2), as_left(Z2), zl.map))
    assert all(v == t.target.zero for v in t.map)


def test_cancellative_tensor_examples(Bm, Z2, S3m):
    assert cancellative_tensor(Bm, as_left(Bm)).module.size == 1
    ct = cancellative_tensor(Z2, as_left(Z2))
    assert ct.module.size == 2
    S = S3m.semiring
    ct2 = cancellative_tensor(S3m, semiring_bimodule(S, "left"))
    assert ct2.module.size == 1


def test_cancellative_tensor_universal_property(Bm, Z2):
    targets = cancellative_targets(4)
    assert certify_cancellative_universal(Bm, as_left(Bm), targets) > 0
    assert certify_cancellative_universal(Z2, as_left(Z2), targets) > 0


def test_unit_isos_on_pools():
    count = 0
    for S in suite_semirings():
        for _, M in suite_pool(S):
            pres, iso = unit_iso(M)
            assert iso.valid
            presL, isoL = unit_iso_left(as_left(M))
            assert isoL.valid
            count += 1
    assert count >= 10


def test_associativity_bool(Bm, B):
    N_bi = semiring_bimodule(B, "left")
    P2, Q2, iso = associativity_iso(Bm, N_bi, as_left(Bm))
    assert iso.valid
    assert isomorphic(P2.module, Bm, monoid_only=True)


def test_associativity_z4(Z2, Z4):
    N_bi = with_bimodule_structure(as_left(Z2))
    P2, Q2, iso = associativity_iso(Z2, N_bi, as_left(Z2))
    assert iso.valid


def test_adjunction_unit_case(B):
    M_bi = semiring_bimodule(B, "right")
    X = semiring_module(B, "left")
    rep = adjunction_iso(M_bi, X, X)
    assert rep.holds


def test_nu_free_rank_one(Z4):
    X = semiring_module(Z4, "left")
    comp = dual_comparison(X, X)
    assert comp.bijective


def test_nu_rank_two(Z4):
    X = free_module(Z4, 2, "left")
    Z = semiring_module(Z4, "left")
    comp = dual_comparison(X, Z)
    assert comp.bijective


def test_nu_trivial(Z4):
    X = trivial_module(Z4, "left")
    comp = dual_comparison(X, semiring_module(Z4, "left"))
    assert comp.bijective


def test_nu_without_flat_hypothesis_still_reports(Z4):
    X = semiring_module(Z4, "left")
    Z = zmod_module(4, 2, "left")
    comp = dual_comparison(X, Z)
    assert comp.map.source.size >= 1  # evaluated without crashing
