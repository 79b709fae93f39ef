"""Bases of the quotient of F2[x_1..x_q] by hit elements, degree by degree.

``Q_n = (degree-n polynomials) / (hit elements)``.  The quotient basis is the
set of non-pivot monomials of the hit-span echelon ("admissible monomials"):
each class has a unique normal form supported on them.

Because columns are eliminated largest-monomial-first and every echelon row is
"pivot plus strictly smaller monomials", pivots stratify by weight vector, and
``dim (Q_n)^w = #columns of weight w - #pivots of weight w`` for the weight
subquotient ``(Q_n)^w``.  These per-weight dimensions sum to ``dim Q_n`` by
construction.

Also here: the halving map on classes (divides all-odd exponent monomials by
squaring-root; zero otherwise), its section ``g -> x_1...x_q g^2``, and the
minimal-spike pruning filter for very large degrees.

Results are memoized in-process and, optionally, in a small JSON cache on
disk (one file per (q, n); atomic writes; versioned format).
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from . import steenrod
from .f2linalg import lsb
from .polyspace import (
    Monomial,
    Polynomial,
    WeightVector,
    check_rank,
    count_monomials,
    minimal_spike,
    weight_vector,
)

CACHE_ENV = "COHITLAB_CACHE"
CACHE_FORMAT = 1


class ResourceLimit(RuntimeError):
    """Raised when a computation would exceed the configured column budget."""


@dataclass
class EngineConfig:
    """Knobs for the quotient engine.

    cache_dir: where JSON results live (``$COHITLAB_CACHE`` or ``.cohitlab``).
    use_cache: read/write the on-disk cache.
    max_columns: refuse degrees whose monomial count exceeds this.
    prune: drop columns below the minimal-spike weight before eliminating
        (sound because such monomials are always hit; intended for very
        large degrees).
    """

    cache_dir: Path = field(
        default_factory=lambda: Path(os.environ.get(CACHE_ENV, ".cohitlab"))
    )
    use_cache: bool = True
    max_columns: int = 1 << 21
    prune: bool = False


def default_config() -> EngineConfig:
    return EngineConfig()


# -- disk cache ---------------------------------------------------------------


def _cache_path(config: EngineConfig, q: int, n: int) -> Path:
    return config.cache_dir / f"q{q}_n{n}.json"


def _cache_load(config: EngineConfig, q: int, n: int) -> dict:
    if not config.use_cache:
        return {}
    path = _cache_path(config, q, n)
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        return {}
    if data.get("format") != CACHE_FORMAT:
        return {}
    return data


def _cache_store(config: EngineConfig, q: int, n: int, updates: dict) -> None:
    if not config.use_cache:
        return
    data = _cache_load(config, q, n)
    data.update(updates)
    data.update({"format": CACHE_FORMAT, "q": q, "n": n})
    path = _cache_path(config, q, n)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh)
        os.replace(tmp, path)
    except OSError:
        return


# -- the quotient engine ------------------------------------------------------


def _check_budget(config: EngineConfig, q: int, n: int) -> None:
    cols = count_monomials(q, n)
    if cols > config.max_columns:
        raise ResourceLimit(
            f"degree {n} in {q} variables needs {cols} columns; "
            f"budget is {config.max_columns}"
        )


def span_for(q: int, n: int, config: EngineConfig | None = None) -> steenrod.HitSpan:
    """The (memoized) hit-span echelon used for all degree-(q, n) queries."""
    config = config or default_config()
    check_rank(q)
    _check_budget(config, q, n)
    bound: WeightVector | None = None
    if config.prune:
        spike = minimal_spike(q, n)
        if spike is not None:
            bound = weight_vector(spike)
    return steenrod.hit_span(q, n, restrict_weight=bound)


@dataclass
class QuotientData:
    """A degree's quotient basis plus coordinate maps into it."""

    span: steenrod.HitSpan
    basis: tuple[Monomial, ...]  # admissible monomials, ascending

    def __post_init__(self) -> None:
        self._pos_to_index = {
            self.span.position[m]: i for i, m in enumerate(self.basis)
        }

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, f: Polynomial) -> int:
        """Coefficient bit-vector of [f] over the admissible basis."""
        nf = self.span.echelon.normal_form(self.span.to_vector(f))
        out = 0
        while nf:
            p = lsb(nf)
            nf ^= 1 << p
            out |= 1 << self._pos_to_index[p]
        return out

    def from_coordinates(self, bits: int) -> Polynomial:
        monos = []
        while bits:
            i = lsb(bits)
            bits ^= 1 << i
            monos.append(self.basis[i])
        return Polynomial(self.span.q, monos)


def quotient(q: int, n: int, config: EngineConfig | None = None) -> QuotientData:
    span = span_for(q, n, config)
    return QuotientData(span, tuple(span.admissible_monomials()))


def cohit_basis(
    q: int, n: int, config: EngineConfig | None = None
) -> list[Monomial]:
    """Admissible-monomial basis of Q_n, ascending in the monomial order."""
    config = config or default_config()
    cached = _cache_load(config, q, n)
    if "admissible" in cached:
        return [tuple(m) for m in cached["admissible"]]
    basis = quotient(q, n, config).basis
    _cache_store(
        config,
        q,
        n,
        {"dim": len(basis), "admissible": [list(m) for m in basis]},
    )
    return list(basis)


def cohit_dim(q: int, n: int, config: EngineConfig | None = None) -> int:
    config = config or default_config()
    cached = _cache_load(config, q, n)
    if "dim" in cached:
        return int(cached["dim"])
    return len(cohit_basis(q, n, config))


def weight_key(w: WeightVector) -> str:
    return ",".join(str(x) for x in w)


def weight_table(
    q: int, n: int, config: EngineConfig | None = None
) -> dict[WeightVector, int]:
    """dim (Q_n)^w for every weight w occurring in degree n."""
    config = config or default_config()
    cached = _cache_load(config, q, n)
    if "weights" in cached:
        return {
            tuple(int(x) for x in key.split(",")): dim
            for key, dim in cached["weights"].items()
        }
    span = span_for(q, n, config)
    table = {
        w: cols - pivots for w, (cols, pivots) in span.weight_table().items()
    }
    _cache_store(
        config,
        q,
        n,
        {"weights": {weight_key(w): d for w, d in sorted(table.items())}},
    )
    return table


def weight_subquotient(
    q: int, n: int, omega: WeightVector, config: EngineConfig | None = None
) -> tuple[int, list[Monomial]]:
    """(dimension, admissible monomials) of the weight-omega subquotient."""
    omega = tuple(omega)
    while omega and omega[-1] == 0:
        omega = omega[:-1]
    span = span_for(q, n, config)
    basis = [m for m in span.admissible_monomials() if weight_vector(m) == omega]
    table = span.weight_table()
    cols, pivots = table.get(omega, (0, 0))
    dim = cols - pivots
    assert dim == len(basis)
    return dim, basis


# -- halving maps ---------------------------------------------------------------


def kameko_down_monomial(mono: Monomial) -> Monomial | None:
    """(e_i) -> ((e_i - 1) / 2) when every exponent is odd, else None."""
    if any(e % 2 == 0 for e in mono):
        return None
    return tuple((e - 1) // 2 for e in mono)


def kameko_up_monomial(mono: Monomial) -> Monomial:
    return tuple(2 * e + 1 for e in mono)


def kameko_down(f: Polynomial) -> Polynomial:
    """The squaring-operation quotient map on polynomials (kills non-all-odd)."""
    acc: set[Monomial] = set()
    for m in f.monomials:
        d = kameko_down_monomial(m)
        if d is not None:
            acc ^= {d}
    return Polynomial(f.q, acc)


def kameko_up(g: Polynomial) -> Polynomial:
    """g -> x_1...x_q g^2, the section of the halving map."""
    return Polynomial(g.q, (kameko_up_monomial(m) for m in g.monomials))


@dataclass
class KamekoMap:
    """The induced halving map on quotient bases Q_n -> Q_{(n-q)/2}."""

    q: int
    n: int
    domain: QuotientData
    codomain: QuotientData
    images: list[int]  # codomain coordinates of each domain basis class

    @property
    def target_degree(self) -> int:
        return (self.n - self.q) // 2

    def matrix_rows(self) -> list[int]:
        """Rows over codomain coordinates, one per domain basis element."""
        return list(self.images)

    def rank(self) -> int:
        from .f2linalg import echelonize

        return echelonize(self.images, self.codomain.dim).rank

    def is_surjective(self) -> bool:
        return self.rank() == self.codomain.dim

    def kernel_coordinates(self) -> list[int]:
        """Basis of the kernel, as bit-vectors over the domain basis."""
        from .f2linalg import BitMatrix

        mat = BitMatrix(self.codomain.dim, self.images)
        constraints = mat.transpose()
        return constraints.kernel()

    def kernel_classes(self) -> list[Polynomial]:
        return [self.domain.from_coordinates(v) for v in self.kernel_coordinates()]


def kameko_matrix(q: int, n: int, config: EngineConfig | None = None) -> KamekoMap:
    """The halving map on classes; requires n >= q and n = q mod 2."""
    check_rank(q)
    if n < q or (n - q) % 2:
        raise ValueError(f"halving map undefined for q={q}, n={n}")
    m = (n - q) // 2
    domain = quotient(q, n, config)
    codomain = quotient(q, m, config)
    images = []
    for b in domain.basis:
        d = kameko_down_monomial(b)
        images.append(0 if d is None else codomain.coordinates(Polynomial(q, [d])))
    return KamekoMap(q, n, domain, codomain, images)


# -- pruning -------------------------------------------------------------------


def singer_prune(
    q: int, n: int, config: EngineConfig | None = None
) -> tuple[WeightVector | None, list[Monomial]]:
    """Monomials surviving the minimal-spike weight filter.

    Monomials whose weight vector is left-lex below the minimal spike's are
    hit, so they can be dropped from the column space.  Returns the weight
    bound (None when no minimal spike exists, i.e. mu(n) > q) and the kept
    monomials, ascending.
    """
    from .polyspace import enumerate_monomials

    check_rank(q)
    spike = minimal_spike(q, n)
    monos = enumerate_monomials(q, n)
    if spike is None:
        return None, monos
    bound = weight_vector(spike)
    pad = n.bit_length() + 1

    def padded(w: WeightVector) -> tuple[int, ...]:
        return tuple(w) + (0,) * (pad - len(w))

    kept = [m for m in monos if padded(weight_vector(m)) >= padded(bound)]
    return bound, kept
