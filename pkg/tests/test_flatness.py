from __future__ import annotations

import json

import pytest

from semiflat.catalog import (bool_semiring, chain_module, free_module,
                              suite_pool, trivial_module)
from semiflat.congruence import quotient_by_sub
from semiflat.errors import NotExact
from semiflat.flatness import (SearchConfig, baer_ideal_criterion,
                               fg_reduction_check, flat_certificate_check,
                               flatness_flags, in_i_uniform_class,
                               is_mono_flat, is_uniformly_M_flat,
                               is_uniformly_fg, is_uniformly_flat,
                               is_uniformly_fp, middle_flat_transfer,
                               projectivity_witness, search_counterexamples,
                               sum_retract_suite, trivial_certificate)
from semiflat.structures import identity_morphism
from semiflat.subsets import submodule_of, subsemimodule


@pytest.fixture(scope="module")
def z4_pool(Z4):
    return tuple(m for _, m in suite_pool(Z4))


def test_free_rank_one_is_flat(Z4m, z4_pool):
    assert is_uniformly_flat(Z4m, z4_pool).holds


def test_z2_fails_against_z4(Z2, Z4m):
    v = is_uniformly_M_flat(Z2, Z4m)
    assert not v.holds
    assert v.witness == ((0, 2), "not-injective")


def test_trivial_is_flat(Z4, z4_pool):
    assert is_uniformly_flat(trivial_module(Z4), z4_pool).holds


def test_empty_universe_vacuous(Z2):
    assert is_uniformly_flat(Z2, ()).holds


def test_mono_flat_and_class_flags(Z2, Z4m):
    assert not is_mono_flat(Z2, Z4m).holds
    assert in_i_uniform_class(Z2, Z4m).holds
    flags = flatness_flags(Z2, Z4m)
    assert not flags["uniformly_flat"].holds


def test_free_is_mono_flat_everywhere(Z4m, z4_pool):
    for M in z4_pool:
        assert is_mono_flat(Z4m, M).holds
        assert in_i_uniform_class(Z4m, M).holds


def test_fg_reduction(Z4m, Z2):
    rep = fg_reduction_check(Z4m, Z4m)
    assert rep["applicable"] and rep["agree"] and rep["value"]
    rep2 = fg_reduction_check(Z2, Z4m)
    assert rep2["applicable"] and rep2["agree"] and not rep2["value"]
    rep3 = fg_reduction_check(Z4m, trivial_module(Z4m.semiring))
    assert rep3["applicable"] and rep3["value"]


def test_middle_transfer(Z4m, Z4):
    U = subsemimodule(Z4m, (0, 2))
    sub, inc = submodule_of(Z4m, U)
    Q, pi = quotient_by_sub(Z4m, U)
    rep = middle_flat_transfer(Z4m, inc, pi)
    assert rep["middle"] and rep["sub"] and rep.get("quotient", True)
    rep2 = middle_flat_transfer(trivial_module(Z4), inc, pi)
    assert rep2["middle"] in (True, False)


def test_middle_transfer_needs_exactness(Z4m):
    U = subsemimodule(Z4m, (0, 2))
    sub, inc = submodule_of(Z4m, U)
    with pytest.raises(NotExact):
        middle_flat_transfer(Z4m, inc, identity_morphism(Z4m))


def test_sum_retract(Z4m, Z2):
    rep = sum_retract_suite((Z4m, Z4m), Z4m)
    assert rep["sum"] and all(rep["parts"])
    rep2 = sum_retract_suite((Z2, Z4m), Z4m)
    assert not rep2["sum"] and rep2["parts"] == [False, True]
    rep3 = sum_retract_suite((Z4m,), Z4m)
    assert rep3["sum"] == rep3["parts"][0]


def test_uniformly_fg_witnesses(Z4m, Z2, S3m):
    assert is_uniformly_fg(Z4m)["rank"] == 1
    assert is_uniformly_fg(Z2)["rank"] == 1
    assert is_uniformly_fg(S3m)["rank"] == 1
    assert is_uniformly_fg(trivial_module(Z4m.semiring))["rank"] == 1


def test_chain3_is_not_uniformly_fg():
    assert is_uniformly_fg(chain_module(3)) is None
    assert is_uniformly_fp(chain_module(3)) is None


def test_uniformly_fp_presentations(Z2):
    rep = is_uniformly_fp(Z2, n_max=1)
    assert rep is not None
    assert rep["presentations"], "expected at least one two-step presentation"
    pres = rep["presentations"][0]
    assert pres["kernel"] == (0, 2)


def test_projectivity_witness(Z4m, Z2, B):
    assert projectivity_witness(Z4m)["rank"] == 1
    assert projectivity_witness(Z2) is None
    assert projectivity_witness(free_module(B, 2))["rank"] in (1, 2)


def test_certificate_check(Z4m, z4_pool):
    cert = trivial_certificate(Z4m)
    rep = flat_certificate_check(Z4m, cert, z4_pool)
    assert rep["flat"]


def test_certificate_requires_witnesses(Z2, z4_pool):
    assert trivial_certificate(Z2) is None


def test_baer_ideal_criterion(Z4m, Z2, Z4, z4_pool):
    rep = baer_ideal_criterion(Z4m, Z4m, z4_pool)
    assert rep["ideal_wise"] and rep["uniformly_flat"]
    rep2 = baer_ideal_criterion(Z2, Z4m, z4_pool)
    assert not rep2["ideal_wise"] and rep2["ideal_witness"] == (0, 2)
    assert not rep2["uniformly_flat"]
    T = trivial_module(Z4)
    rep3 = baer_ideal_criterion(T, Z4m, z4_pool)
    assert rep3["ideal_wise"] and rep3["uniformly_flat"]


def test_injectivity_flatness_bridge_on_pools(Z4, z4_pool):
    from semiflat.flatness import injectivity_flatness_bridge
    seen_negative = False
    for F in z4_pool:
        for M in z4_pool:
            for X in z4_pool:
                rep = injectivity_flatness_bridge(F, M, X)
                if not rep["flat"]:
                    seen_negative = True
    assert seen_negative, "the triple family must include non-flat instances"


def test_injective_cogenerator_equivalence():
    from semiflat.catalog import semiring_module
    from semiflat.flatness import injective_cogenerator_equivalence
    B = bool_semiring()
    pool = tuple(m for _, m in suite_pool(B))
    rep = injective_cogenerator_equivalence(semiring_module(B), pool)
    assert rep["certified"]
    assert all(flat == inj for flat, inj in rep["instances"])


def test_cogenerator_equivalence_over_z4(Z4, Z4m, z4_pool):
    from semiflat.flatness import injective_cogenerator_equivalence
    rep = injective_cogenerator_equivalence(Z4m, z4_pool)
    assert rep["certified"]
    flags = dict(zip((m.size for m in z4_pool), rep["instances"]))
    assert all(flat == inj for flat, inj in rep["instances"])
    assert any(not flat for flat, _ in rep["instances"])


def test_fg_subsemimodule_reduction(z4_pool):
    from semiflat.flatness import fg_subsemimodule_reduction
    for F in z4_pool:
        fg_subsemimodule_reduction(F, z4_pool)


def test_colimit_flatness_transfer(Z4m, Z2):
    from semiflat.flatness import colimit_flatness_transfer
    from semiflat.limits import chain_system, constant_system
    from semiflat.structures import build_morphism
    assert colimit_flatness_transfer(constant_system(Z4m, 3), Z4m)
    mod2 = build_morphism(Z4m, Z2, [0, 1, 0, 1])
    assert not colimit_flatness_transfer(chain_system([mod2]), Z4m)


def test_search_over_z4(tmp_path, Z4):
    out = tmp_path / "records.jsonl"
    cfg = SearchConfig((Z4,), max_size=4, budget_seconds=120.0, out_path=str(out))
    rep = search_counterexamples(cfg)
    assert not rep["lattice_violations"]
    sizes = sorted(r.size for r in rep["records"])
    assert sizes == [1, 2, 4, 4]
    z2_rec = next(r for r in rep["records"] if r.size == 2)
    assert not z2_rec.mono_flat and not z2_rec.uniformly_flat
    lines = out.read_text().strip().splitlines()
    assert len(lines) == len(rep["records"])
    for line in lines:
        json.loads(line)


def test_search_over_bool():
    B = bool_semiring()
    cfg = SearchConfig((B,), max_size=2, budget_seconds=60.0)
    rep = search_counterexamples(cfg)
    assert not rep["lattice_violations"]
    assert all(r.uniformly_flat for r in rep["records"])


def test_empty_search():
    cfg = SearchConfig((), max_size=4)
    rep = search_counterexamples(cfg)
    assert rep["records"] == []
