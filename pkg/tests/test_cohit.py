from __future__ import annotations

import json

import pytest

from cohitlab import refdata
from cohitlab.cohit import (
    EngineConfig,
    ResourceLimit,
    cohit_basis,
    cohit_dim,
    kameko_down,
    kameko_down_monomial,
    kameko_matrix,
    kameko_up,
    kameko_up_monomial,
    quotient,
    weight_subquotient,
    weight_table,
)
from cohitlab.polyspace import Polynomial, mu, weight_vector


def test_one_variable_dims(config):
    for n in range(1, 32):
        expected = 1 if (n + 1) & n == 0 else 0
        assert cohit_dim(1, n, config) == expected


def test_two_variable_dims_against_the_frozen_table(config):
    for n, dim in refdata.COHIT_DIMS_RANK2.items():
        assert cohit_dim(2, n, config) == dim, f"n={n}"


def test_three_variable_dims_small(config):
    for n, dim in refdata.COHIT_DIMS_RANK3.items():
        if n <= 12:
            assert cohit_dim(3, n, config) == dim, f"n={n}"


def test_dims_vanish_exactly_when_mu_exceeds_the_rank(config):
    for q in (2, 3):
        table = (
            refdata.COHIT_DIMS_RANK2 if q == 2 else refdata.COHIT_DIMS_RANK3
        )
        for n, dim in table.items():
            assert (dim == 0) == (mu(n) > q), f"q={q} n={n}"


def test_quotient_coordinates_round_trip(config):
    data = quotient(3, 6, config)
    for i, m in enumerate(data.basis):
        f = Polynomial(3, [m])
        assert data.coordinates(f) == 1 << i
        assert data.from_coordinates(1 << i) == f
    # a hit element has zero coordinates
    from cohitlab.steenrod import sq

    hit = sq(1, Polynomial(3, [(1, 2, 2)])) ^ sq(2, Polynomial(3, [(2, 1, 1)]))
    if not hit.is_zero():
        assert data.coordinates(hit) == 0


def test_basis_monomials_are_not_hit(config):
    from cohitlab.steenrod import is_hit

    for m in cohit_basis(3, 8, config=config):
        assert not is_hit(Polynomial(3, [m]))


def test_weight_table_totals(config):
    for q, n in ((2, 6), (3, 8), (4, 9)):
        table = weight_table(q, n, config)
        assert sum(table.values()) == cohit_dim(q, n, config)


def test_weight_subquotient_matches_the_table(config):
    table = weight_table(4, 9, config)
    for w, dim in table.items():
        got_dim, basis = weight_subquotient(4, 9, w, config)
        assert got_dim == dim
        assert len(basis) == dim
        assert all(weight_vector(m) == w for m in basis)


def test_weight_subquotient_ignores_trailing_zeros(config):
    a = weight_subquotient(4, 9, (3, 1, 1), config)
    b = weight_subquotient(4, 9, (3, 1, 1, 0, 0), config)
    assert a == b


def test_kameko_monomial_maps():
    assert kameko_down_monomial((3, 1, 5)) == (1, 0, 2)
    assert kameko_down_monomial((2, 1, 5)) is None  # an even exponent
    assert kameko_up_monomial((1, 0, 2)) == (3, 1, 5)
    g = Polynomial(2, [(1, 0), (0, 1)])
    assert kameko_down(kameko_up(g)) == g


def test_kameko_iso_when_mu_says_so(config):
    # mu(11) = 3, so the halving map Q_11 -> Q_4 at rank 3 is an isomorphism
    km = kameko_matrix(3, 11, config)
    assert km.target_degree == 4
    assert km.domain.dim == refdata.COHIT_DIMS_RANK3[11] == 8
    assert km.codomain.dim == refdata.COHIT_DIMS_RANK3[4] == 8
    assert km.rank() == 8
    assert km.is_surjective()
    assert km.kernel_coordinates() == []


def test_kameko_surjective_with_kernel(config):
    # mu(10) = 2 < 4: surjective but far from injective
    km = kameko_matrix(4, 10, config)
    assert km.target_degree == 3
    assert km.is_surjective()
    assert len(km.kernel_coordinates()) == km.domain.dim - km.codomain.dim
    for vec in km.kernel_coordinates():
        image = 0
        bits = vec
        while bits:
            i = bits & -bits
            image ^= km.images[i.bit_length() - 1]
            bits ^= i
        assert image == 0


def test_kameko_kernel_classes_map_to_zero(config):
    km = kameko_matrix(4, 4, config)
    assert km.kernel_classes()
    for g in km.kernel_classes():
        assert km.codomain.coordinates(kameko_down(g)) == 0


def test_resource_limit_mentions_the_budget(config):
    tight = EngineConfig(cache_dir=config.cache_dir, max_columns=10)
    with pytest.raises(ResourceLimit, match="budget is 10"):
        cohit_dim(4, 9, tight)


def test_prune_reproduces_the_unpruned_dimension(config):
    pruned = EngineConfig(cache_dir=config.cache_dir / "p", prune=True)
    for q, n in ((3, 8), (4, 9), (4, 17)):
        assert cohit_dim(q, n, pruned) == cohit_dim(q, n, config)


def test_disk_cache_round_trip(tmp_path):
    cfg = EngineConfig(cache_dir=tmp_path / "c")
    first = cohit_basis(3, 8, config=cfg)
    files = list((tmp_path / "c").glob("*.json"))
    assert files, "expected a cache entry on disk"
    again = cohit_basis(3, 8, config=EngineConfig(cache_dir=tmp_path / "c"))
    assert first == again
    # corrupt entries are ignored, not trusted
    for f in files:
        f.write_text("{not json")
    rebuilt = cohit_basis(3, 8, config=EngineConfig(cache_dir=tmp_path / "c"))
    assert rebuilt == first


def test_cache_disabled_matches_cached_results(tmp_path):
    cached = EngineConfig(cache_dir=tmp_path / "c")
    uncached = EngineConfig(cache_dir=tmp_path / "c", use_cache=False)
    assert cohit_basis(3, 10, config=cached) == cohit_basis(
        3, 10, config=uncached
    )
    assert not list((tmp_path / "c").glob("*n11*"))


def test_cache_entry_is_json_with_format_tag(tmp_path):
    cfg = EngineConfig(cache_dir=tmp_path / "c")
    cohit_dim(2, 6, cfg)
    (entry,) = (tmp_path / "c").glob("q2_n6.json")
    data = json.loads(entry.read_text())
    assert data["format"] == 1
    assert data["q"] == 2 and data["n"] == 6
