"""Acceptance gate: one test (and one pass/fail line) per shipped criterion.

Criteria 1-8 are gating.  Criterion 9 reaches degrees 64/65 and only runs
when COHITLAB_STRETCH=1; a resource-cap refusal there is reported as a skip,
not a failure.  Each test prints a single summary line so a transcript of
``pytest -v`` doubles as the checklist.
"""

from __future__ import annotations

import os
import time

import pytest

import property_checks as pc
from cohitlab import refdata
from cohitlab.cohit import (
    EngineConfig,
    ResourceLimit,
    cohit_basis,
    cohit_dim,
    kameko_matrix,
)
from cohitlab.f2linalg import echelonize
from cohitlab.glaction import CoinvariantData, kameko_kernel_invariants
from cohitlab.lambda_algebra import (
    LambdaElement,
    adem_reduce,
    classes_equal,
    differential,
    ext_dim,
    from_words,
    homology_coordinates,
    is_cycle,
    psi,
)
from cohitlab.polyspace import DualElement, Polynomial, pairing
from cohitlab.steenrod import is_annihilated

CONFIG = EngineConfig()


def _line(criterion: str, detail: str) -> None:
    print(f"criterion {criterion}: PASS - {detail}")


def test_criterion_1_dimension_table():
    t0 = time.time()
    dims = {n: cohit_dim(4, n, CONFIG) for n in (9, 21, 45)}
    elapsed = time.time() - t0
    assert dims == {9: 46, 21: 94, 45: 105}, dims
    assert elapsed < 300, f"budget 5 min, took {elapsed:.0f}s"
    _line("1", f"dim Q_9/21/45 = 46/94/105 in {elapsed:.1f}s")


def test_criterion_2_printed_bases():
    basis_9 = cohit_basis(4, 9, config=CONFIG)
    assert set(basis_9) == set(refdata.COHIT_BASIS_4_9)
    assert len(basis_9) == 46
    basis_17 = cohit_basis(4, 17, config=CONFIG)
    assert len(basis_17) == 87
    assert set(basis_17) == set(refdata.COHIT_BASIS_4_17)
    _line("2", "printed bases reproduced at n=9 (46) and n=17 (87)")


def test_criterion_3_coinvariants_and_the_pairing():
    t0 = time.time()
    dims = {}
    keep = {}
    for n in (9, 21, 45):
        data = CoinvariantData(4, n, "gl", CONFIG)
        dims[n] = data.dim
        keep[n] = data
    assert dims == {9: 1, 21: 0, 45: 1}, dims
    # the degree-9 representative pairs to 1 against the invariant class
    (rep,) = keep[9].representatives()
    invariant = Polynomial(4, refdata.GL_INVARIANT_GENERATOR_9)
    assert pairing(rep, invariant) == 1
    elapsed = time.time() - t0
    assert elapsed < 600, f"budget 10 min, took {elapsed:.0f}s"
    _line("3", f"coinvariant dims (1, 0, 1); <[rep], [invariant]> = 1; "
               f"{elapsed:.1f}s")


def test_criterion_4_degree_17_generator():
    zeta = DualElement(4, refdata.DUAL_GENERATOR_17)
    assert len(zeta.terms) == 44
    assert is_annihilated(zeta)
    data = CoinvariantData(4, 17, "gl", CONFIG)
    assert data.dim == 1
    assert data.class_coordinates(zeta) == 1
    image = adem_reduce(psi(zeta))
    assert is_cycle(image)
    e0 = LambdaElement(refdata.PSI_IMAGE_17_CYCLE)
    preimage = LambdaElement(refdata.PSI_IMAGE_17_PREIMAGE)
    # term-by-term: the image equals the printed cycle plus an explicit boundary
    assert image == adem_reduce(e0 ^ differential(preimage))
    assert classes_equal(psi(zeta), e0)
    assert homology_coordinates(e0, 4, 17) != (0,) * ext_dim(4, 17)
    _line("4", "44-term generator: annihilated, class-1, image = printed "
               "cycle + d(printed preimage)")


def test_criterion_5_printed_chain_images():
    for term, raw in refdata.PSI_RAW_TERM_IMAGES_9.items():
        got = adem_reduce(psi(DualElement(4, [term])))
        assert got == adem_reduce(LambdaElement(raw)), term
    classline = from_words((1, 3, 3, 2))
    assert homology_coordinates(classline, 4, 9) == (1,)
    _line("5", "four printed images reproduce; [l1 l3 l3 l2] is nonzero "
               "at (4, 9)")


def test_criterion_6_halving_kernel():
    for n in (4, 10):
        assert kameko_kernel_invariants(4, n, "gl", CONFIG).dim == 0, n
    km = kameko_matrix(4, 4, CONFIG)
    kernel = km.kernel_coordinates()
    assert len(kernel) == 20
    frozen = [
        km.domain.coordinates(Polynomial(4, [m]))
        for m in refdata.KAMEKO_KERNEL_BASIS_4_4
    ]
    ech = echelonize(kernel, km.domain.dim)
    assert all(ech.contains(v) for v in frozen)
    assert echelonize(frozen, km.domain.dim).rank == 20
    _line("6", "kernel fixed points trivial at n=4, 10; 20-element kernel "
               "basis matches")


def test_criterion_7_homology_oracle():
    t0 = time.time()
    pc.check_length_one_homology(63)
    pc.check_length_two_homology_census(40)
    assert ext_dim(4, 9) == 1
    elapsed = time.time() - t0
    assert elapsed < 300, f"budget 5 min, took {elapsed:.0f}s"
    _line("7", f"length-1 table to n=63, length-2 census to n=40, "
               f"ext(4,9)=1 in {elapsed:.1f}s")


def test_criterion_8_property_suites():
    t0 = time.time()
    counts = {
        "d2": pc.check_differential_squares_to_zero(4, 52),
        "adjoint": pc.check_adjointness(1000),
        "primitives": pc.check_primitives_match_cohit_dims(4, 20, CONFIG),
        "spikes": pc.check_spike_criterion_against_brute_force(4, 16, CONFIG),
        "weights": pc.check_weight_dims_sum_to_cohit_dim(4, 21, CONFIG),
        "transfer": pc.check_low_rank_transfer_is_iso(3, 20, CONFIG),
    }
    elapsed = time.time() - t0
    assert all(v > 0 for v in counts.values())
    assert elapsed < 1200, f"budget 20 min, took {elapsed:.0f}s"
    _line("8", "property suites " + ", ".join(
        f"{k}={v}" for k, v in counts.items()) + f" in {elapsed:.1f}s")


@pytest.mark.skipif(
    os.environ.get("COHITLAB_STRETCH") != "1",
    reason="stretch degrees 64/65; enable with COHITLAB_STRETCH=1",
)
def test_criterion_9_stretch_degrees():
    budget = EngineConfig(
        cache_dir=CONFIG.cache_dir, prune=True, max_columns=1 << 21
    )
    t0 = time.time()
    try:
        assert cohit_dim(4, 65, budget) == 150
        assert CoinvariantData(4, 65, "gl", budget).dim == 1
        data64 = CoinvariantData(4, 64, "gl", budget)
        assert data64.dim == 1
        zeta = DualElement(4, refdata.DUAL_GENERATOR_64)
        assert is_annihilated(zeta)
        assert data64.class_coordinates(zeta) == 1
    except (ResourceLimit, MemoryError) as exc:
        pytest.skip(f"resource cap exceeded, reported not failed: {exc}")
    elapsed = time.time() - t0
    assert elapsed < 7200, f"budget 2 h, took {elapsed:.0f}s"
    _line("9", f"dim Q_65 = 150; coinvariants at 64/65 both rank 1, "
               f"generated at 64 by the annihilated dual; {elapsed:.1f}s")
