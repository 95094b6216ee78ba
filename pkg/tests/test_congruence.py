from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiflat.catalog import (cyclic_monoid, product_monoid, sat_semiring,
                              trivial_module, zmod_module)
from semiflat.congruence import (cancellative_reflection,
                                 module_congruence_closure,
                                 monoid_congruence_closure,
                                 quotient_by_congruence, quotient_by_sub,
                                 quotient_cancellative, reflection_kernel)
from semiflat.errors import NotACongruence
from semiflat.homology import hom_module, morphism_profile
from semiflat.structures import find_monoid_isomorphism, is_cancellative, isomorphic
from semiflat.subsets import subsemimodule
from semiflat.suite import (minimal_congruence_dense,
                            minimal_congruence_partitions)


def test_empty_pairs_give_identity(Bm):
    cong = module_congruence_closure(Bm, [])
    assert cong.class_count == Bm.size


def test_bool_collapse(Bm):
    cong = module_congruence_closure(Bm, [(0, 1)])
    assert cong.class_count == 1


def test_closure_matches_oracles_on_mixed_monoid():
    table = product_monoid(cyclic_monoid(1, 2), cyclic_monoid(0, 2))
    pairs = [(1, 4)]
    got = monoid_congruence_closure(table, pairs)
    dense_cls, dense_n = minimal_congruence_dense(table, pairs)
    part_cls, part_n = minimal_congruence_partitions(table, pairs)
    assert got.class_of == dense_cls == part_cls
    assert got.class_count == dense_n == part_n


def test_quotient_identity_congruence(Z4m):
    cong = module_congruence_closure(Z4m, [])
    Q, pi = quotient_by_congruence(Z4m, cong)
    assert Q.size == 4 and pi.surjective and pi.injective


def test_quotient_total_congruence(Z4m):
    cong = module_congruence_closure(Z4m, [(0, 1)])
    Q, _ = quotient_by_congruence(Z4m, cong)
    assert Q.size == 1


def test_quotient_z4_by_two(Z4m):
    cong = module_congruence_closure(Z4m, [(0, 2)])
    Q, _ = quotient_by_congruence(Z4m, cong)
    assert Q.size == 2
    assert find_monoid_isomorphism(Q.add, Q.zero, ((0, 1), (1, 0)), 0) is not None


def test_bad_partition_rejected(Z4m):
    from semiflat.congruence import Congruence
    # gluing 0 and 1 alone is not compatible with translation
    bad = Congruence(4, (0, 0, 1, 2), 3)
    with pytest.raises(NotACongruence):
        quotient_by_congruence(Z4m, bad)


def test_quotient_by_sub_examples(S3m, Z4m):
    Q, pi = quotient_by_sub(S3m, subsemimodule(S3m, (0, 3)))
    assert Q.size == 1
    Q2, pi2 = quotient_by_sub(Z4m, subsemimodule(Z4m, (0, 2)))
    assert Q2.size == 2
    assert morphism_profile(pi2).uniform and pi2.surjective
    Q3, _ = quotient_by_sub(Z4m, subsemimodule(Z4m, (0,)))
    assert isomorphic(Q3, Z4m)


def test_projection_kernel_is_subtractive_closure(S3m):
    from semiflat.subsets import subtractive_closure
    L = subsemimodule(S3m, (0, 3))
    Q, pi = quotient_by_sub(S3m, L)
    kernel = tuple(x for x in range(S3m.size) if pi.map[x] == Q.zero)
    assert kernel == subtractive_closure(S3m, L).members


def test_cancellative_quotients(S3m, Z4m):
    Q, _ = quotient_cancellative(S3m, subsemimodule(S3m, (0,)))
    assert Q.size == 1
    Q2, _ = quotient_cancellative(Z4m, subsemimodule(Z4m, (0,)))
    assert Q2.size == 4 and is_cancellative(Q2)


def test_reflection_examples(Bm, S3m, Z2):
    C, cmap = cancellative_reflection(Bm)
    assert C.size == 1
    C2, _ = cancellative_reflection(S3m)
    assert C2.size == 1
    C3, cmap3 = cancellative_reflection(Z2)
    assert C3.size == 2 and cmap3.injective


def test_reflection_kernel_formula(S3m):
    assert reflection_kernel(S3m) == (0, 1, 2, 3)


def test_reflection_agrees_with_cancellative_quotient_at_zero(Bm):
    Q, _ = quotient_cancellative(Bm, subsemimodule(Bm, (0,)))
    C, _ = cancellative_reflection(Bm)
    assert Q.size == C.size == 1


def test_reflection_universal_property(Z4, Bm):
    # precomposition with the reflection is a bijection onto maps into a
    # cancellative target
    Z2 = zmod_module(4, 2)
    S3 = sat_semiring(3)
    from semiflat.catalog import semiring_module as sm
    M = sm(S3)
    C, cmap = cancellative_reflection(M)
    for N in (trivial_module(S3),):
        HC = hom_module(C, N)
        HM = hom_module(M, N)
        composed = {tuple(h.map[cmap.map[x]] for x in range(M.size)) for h in HC.maps}
        assert composed == {h.map for h in HM.maps}
        assert len(HC.maps) == len(HM.maps)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2), st.integers(1, 3), st.integers(0, 2), st.integers(1, 3),
       st.lists(st.tuples(st.integers(0, 100), st.integers(0, 100)),
                min_size=1, max_size=3))
def test_closure_matches_dense_oracle(i1, p1, i2, p2, raw_pairs):
    table = product_monoid(cyclic_monoid(i1, p1), cyclic_monoid(i2, p2))
    n = len(table)
    pairs = [(a % n, b % n) for a, b in raw_pairs]
    got = monoid_congruence_closure(table, pairs)
    dense_cls, dense_n = minimal_congruence_dense(table, pairs)
    assert got.class_of == dense_cls and got.class_count == dense_n
