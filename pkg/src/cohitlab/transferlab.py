"""Rank-q transfer analysis: coinvariant classes into admissible-word homology.

For each basis class [theta] of the divided-power coinvariants the chain
image psi_q(theta) is a cycle; its coordinates over the homology basis at
(length q, internal degree n) form one row of the transfer matrix.  A
verdict compares the coinvariant dimension with the homology dimension and
reports the rank of the matrix, i.e. whether the induced map is injective,
surjective, or both in that bidegree.

``verify_suite`` bundles named check suites over the structured degree
families; each check re-derives a frozen expectation from
:mod:`cohitlab.refdata` and reports pass/fail with a diff, so a conventions
drift anywhere in the engine surfaces as a named failure here.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field

from . import cohit, glaction, lambda_algebra, refdata
from .cohit import EngineConfig, ResourceLimit
from .f2linalg import echelonize
from .glaction import CoinvariantData
from .lambda_algebra import (
    LambdaElement,
    adem_reduce,
    classes_equal,
    differential,
    ext_dim,
    homology_coordinates,
    is_cycle,
    psi,
)
from .polyspace import DualElement, Polynomial, pairing


@dataclass
class TransferReport:
    """Verdict for one bidegree: domain/codomain dims, matrix, and flags."""

    q: int
    n: int
    domain_dim: int
    codomain_dim: int
    rank: int
    matrix: list[tuple[int, ...]]  # row r = homology coordinates of psi(rep_r)
    representatives: list[DualElement]

    @property
    def injective(self) -> bool:
        return self.rank == self.domain_dim

    @property
    def surjective(self) -> bool:
        return self.rank == self.codomain_dim

    @property
    def isomorphism(self) -> bool:
        return self.injective and self.surjective

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "domain_dim": self.domain_dim,
            "codomain_dim": self.codomain_dim,
            "rank": self.rank,
            "injective": self.injective,
            "surjective": self.surjective,
            "isomorphism": self.isomorphism,
            "matrix": [list(row) for row in self.matrix],
            "representatives": [d.to_json()["terms"] for d in self.representatives],
        }


def transfer_matrix(
    q: int, n: int, config: EngineConfig | None = None
) -> tuple[CoinvariantData, list[tuple[int, ...]]]:
    """Coinvariant data and the homology coordinates of each representative.

    Raises if any representative's chain image fails the cycle test: dual
    classes killed by all positive squares always map to cycles, so a
    non-cycle is an engine bug, not a property of the input.
    """
    data = CoinvariantData(q, n, "gl", config)
    rows = []
    for rep in data.representatives():
        image = adem_reduce(psi(rep))
        if not image.is_zero() and not is_cycle(image):
            raise AssertionError(
                f"chain image of a coinvariant representative at {(q, n)} "
                "is not a cycle"
            )
        rows.append(homology_coordinates(image, q, n))
    return data, rows


def verdict(q: int, n: int, config: EngineConfig | None = None) -> TransferReport:
    """Transfer verdict at one bidegree."""
    data, rows = transfer_matrix(q, n, config)
    codomain = ext_dim(q, n)
    packed = [sum(1 << i for i, c in enumerate(row) if c) for row in rows]
    rank = echelonize(packed, max(codomain, 1)).rank
    return TransferReport(
        q, n, data.dim, codomain, rank, rows, data.representatives()
    )


# ---------------------------------------------------------------------------
# named verification suites
# ---------------------------------------------------------------------------


@dataclass
class CheckResult:
    suite: str
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "status": self.status,
            "detail": self.detail,
        }


@dataclass
class SuiteReport:
    name: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def complete(self) -> bool:
        return all(c.status != "skipped" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "complete": self.complete,
            "checks": [c.to_json() for c in self.checks],
        }


class _Suite:
    """Collects named equality checks into a SuiteReport."""

    def __init__(self, name: str, config: EngineConfig | None):
        self.report = SuiteReport(name)
        self.config = config

    def check(self, name: str, got, want) -> None:
        if got == want:
            self.report.checks.append(CheckResult(self.report.name, name, "pass"))
        else:
            self.report.checks.append(
                CheckResult(
                    self.report.name, name, "fail", f"got {got!r}, want {want!r}"
                )
            )

    def run(self, name: str, fn) -> None:
        """Run a thunk returning (got, want); a ResourceLimit marks a skip."""
        try:
            got, want = fn()
        except ResourceLimit as exc:
            self.report.checks.append(
                CheckResult(self.report.name, name, "skipped", str(exc))
            )
            return
        self.check(name, got, want)

    def skip(self, name: str, why: str) -> None:
        self.report.checks.append(
            CheckResult(self.report.name, name, "skipped", why)
        )


def _verdict_tuple(q: int, n: int, config) -> tuple[int, int, bool]:
    rep = verdict(q, n, config)
    return (rep.domain_dim, rep.codomain_dim, rep.isomorphism)


def _suite_family_a(s: _Suite) -> None:
    """Degrees 6*2^s - 3: dims, generators, and verdicts at s = 1, 2, 3."""
    cfg = s.config
    for deg, dim in ((9, 46), (21, 94), (45, 105)):
        s.run(f"cohit dim n={deg}", lambda d=deg, v=dim: (
            cohit.cohit_dim(4, d, cfg), v))
    s.run("basis n=9", lambda: (
        set(cohit.cohit_basis(4, 9, config=cfg)), set(refdata.COHIT_BASIS_4_9)))
    for deg, dim in ((9, 1), (21, 0), (45, 1)):
        s.run(f"coinvariant dim n={deg}", lambda d=deg, v=dim: (
            glaction.coinvariants(4, d, "gl", cfg).dim, v))
    s.run("invariant generator n=9", lambda: (
        _class_coords(4, 9, refdata.GL_INVARIANT_GENERATOR_9, cfg)
        == _invariant_vector(4, 9, cfg), True))
    s.run("weight-fixed generator n=45", lambda: (
        _weight_invariant_ok(
            4, 45, (3, 3, 3, 3), refdata.GL_INVARIANT_GENERATOR_45_WEIGHT, cfg),
        True))
    s.run("pairing n=9", lambda: (
        pairing(DualElement(4, refdata.DUAL_GENERATOR_9),
                Polynomial(4, refdata.GL_INVARIANT_GENERATOR_9)), 1))
    s.run("dual generator class n=9", lambda: (
        CoinvariantData(4, 9, "gl", cfg).class_coordinates(
            DualElement(4, refdata.DUAL_GENERATOR_9)) != 0, True))
    s.run("spike class vanishes n=21", lambda: (
        CoinvariantData(4, 21, "gl", cfg).class_coordinates(
            DualElement(4, refdata.DUAL_SPIKE_21)), 0))
    s.run("dual generator class n=45", lambda: (
        CoinvariantData(4, 45, "gl", cfg).class_coordinates(
            DualElement(4, refdata.DUAL_GENERATOR_45)) != 0, True))
    for deg in (9, 21, 45):
        s.run(f"transfer verdict n={deg}", lambda d=deg: (
            _verdict_tuple(4, d, cfg), refdata.TRANSFER_VERDICTS[(4, d)]))
    # chain image of the single-term dual: nonzero class at s = 3, boundary
    # at s = 2
    s.run("image class n=45", lambda: (
        homology_coordinates(psi(DualElement(4, [(0, 15, 15, 15)])), 4, 45),
        (1,)))
    s.run("image bounds n=21", lambda: (
        classes_equal(psi(DualElement(4, [(0, 7, 7, 7)])), LambdaElement()),
        True))


def _suite_family_b(s: _Suite) -> None:
    """Degrees 10*2^s - 3: dims, the 44-term generator, verdicts at s = 1, 2."""
    cfg = s.config
    for deg, dim in ((17, 87), (37, 135)):
        s.run(f"cohit dim n={deg}", lambda d=deg, v=dim: (
            cohit.cohit_dim(4, d, cfg), v))
    s.run("basis n=17", lambda: (
        set(cohit.cohit_basis(4, 17, config=cfg)), set(refdata.COHIT_BASIS_4_17)))
    for deg, dim in ((17, 1), (37, 0)):
        s.run(f"coinvariant dim n={deg}", lambda d=deg, v=dim: (
            glaction.coinvariants(4, d, "gl", cfg).dim, v))
    s.run("44-term dual annihilated", lambda: (
        _annihilated(4, refdata.DUAL_GENERATOR_17), True))
    s.run("dual generator class n=17", lambda: (
        CoinvariantData(4, 17, "gl", cfg).class_coordinates(
            DualElement(4, refdata.DUAL_GENERATOR_17)) != 0, True))
    s.run("invariant generator n=17", lambda: (
        _class_coords(4, 17, refdata.GL_INVARIANT_GENERATOR_17, cfg)
        == _invariant_vector(4, 17, cfg), True))
    for deg in (17, 37):
        s.run(f"transfer verdict n={deg}", lambda d=deg: (
            _verdict_tuple(4, d, cfg), refdata.TRANSFER_VERDICTS[(4, d)]))


def _suite_family_c(s: _Suite) -> None:
    """Degrees 3*2^s - 2: halving-kernel invariants and the degree-22 class."""
    cfg = s.config
    for deg in (4, 10, 22, 46):
        s.run(f"kernel invariants n={deg}", lambda d=deg: (
            glaction.kameko_kernel_invariants(4, d, "gl", cfg).dim,
            refdata.KAMEKO_KERNEL_INVARIANT_DIMS[(4, d)]))
    s.run("kernel basis n=4", lambda: (
        _kameko_kernel_matches(4, 4, refdata.KAMEKO_KERNEL_BASIS_4_4, cfg), True))
    for deg, dim in ((4, 0), (10, 0), (22, 1), (46, 0)):
        s.run(f"coinvariant dim n={deg}", lambda d=deg, v=dim: (
            glaction.coinvariants(4, d, "gl", cfg).dim, v))
    s.run("dual generator annihilated n=22", lambda: (
        _annihilated(4, refdata.DUAL_GENERATOR_22), True))
    s.run("image words n=22", lambda: (
        adem_reduce(psi(DualElement(4, refdata.DUAL_GENERATOR_22))).terms,
        frozenset({(3, 7, 7, 5)})))
    for deg in (4, 10, 22, 46):
        s.run(f"transfer verdict n={deg}", lambda d=deg: (
            _verdict_tuple(4, d, cfg), refdata.TRANSFER_VERDICTS[(4, d)]))
    # the rank-3 shadow in degree 19
    s.run("rank-3 dual annihilated n=19", lambda: (
        _annihilated(3, refdata.DUAL_GENERATOR_19_RANK3), True))
    s.run("rank-3 transfer verdict n=19", lambda: (
        _verdict_tuple(3, 19, cfg), refdata.TRANSFER_VERDICTS[(3, 19)]))


def _suite_family_d(s: _Suite, stretch: bool) -> None:
    """Degrees 3(2^s-1) + 2^s(2^{t+1}-1), t >= 4; smallest case n = 65."""
    cfg = s.config
    if not stretch:
        s.skip("n=65 block", "stretch degrees disabled (set COHITLAB_STRETCH=1)")
        return
    s.run("cohit dim n=65", lambda: (cohit.cohit_dim(4, 65, cfg), 150))
    s.run("coinvariant dim n=65", lambda: (
        glaction.coinvariants(4, 65, "gl", cfg).dim, 1))
    s.run("dual generator class n=65", lambda: (
        CoinvariantData(4, 65, "gl", cfg).class_coordinates(
            DualElement(4, refdata.DUAL_GENERATOR_65)) != 0, True))
    s.run("transfer verdict n=65", lambda: (
        _verdict_tuple(4, 65, cfg), refdata.TRANSFER_VERDICTS_STRETCH[(4, 65)]))


def _suite_family_e(s: _Suite, stretch: bool) -> None:
    """Degrees 2(2^s-1) + 2^s(2^t-1), t >= 5; smallest case n = 64."""
    cfg = s.config
    if not stretch:
        s.skip("n=64 block", "stretch degrees disabled (set COHITLAB_STRETCH=1)")
        return
    s.run("dual generator annihilated n=64", lambda: (
        _annihilated(4, refdata.DUAL_GENERATOR_64), True))
    s.run("coinvariant dim n=64", lambda: (
        glaction.coinvariants(4, 64, "gl", cfg).dim, 1))
    s.run("dual generator class n=64", lambda: (
        CoinvariantData(4, 64, "gl", cfg).class_coordinates(
            DualElement(4, refdata.DUAL_GENERATOR_64)) != 0, True))
    s.run("transfer verdict n=64", lambda: (
        _verdict_tuple(4, 64, cfg), refdata.TRANSFER_VERDICTS_STRETCH[(4, 64)]))


def _suite_peel_identities(s: _Suite) -> None:
    """The four printed degree-9 chain images and the induced nonzero class."""
    for term, raw in refdata.PSI_RAW_TERM_IMAGES_9.items():
        s.run(f"image of {term}", lambda t=term, r=raw: (
            adem_reduce(psi(DualElement(4, [t]))),
            adem_reduce(LambdaElement(r))))
    s.run("reduced image of the degree-9 generator", lambda: (
        adem_reduce(psi(DualElement(4, refdata.DUAL_GENERATOR_9))).terms,
        frozenset({(1, 3, 3, 2)})))
    s.run("class is nonzero", lambda: (
        homology_coordinates(
            psi(DualElement(4, refdata.DUAL_GENERATOR_9)), 4, 9), (1,)))


def _suite_boundary_identity(s: _Suite) -> None:
    """The degree-17 image equals the five-term cycle plus an explicit boundary."""
    zeta = DualElement(4, refdata.DUAL_GENERATOR_17)
    e0 = LambdaElement(refdata.PSI_IMAGE_17_CYCLE)
    pre = LambdaElement(refdata.PSI_IMAGE_17_PREIMAGE)
    s.run("five-term element is a cycle", lambda: (is_cycle(e0), True))
    s.run("image equals cycle plus boundary, exactly", lambda: (
        adem_reduce(psi(zeta)),
        adem_reduce(e0 ^ differential(pre))))
    s.run("classes agree", lambda: (classes_equal(psi(zeta), e0), True))
    s.run("class is nonzero", lambda: (
        homology_coordinates(e0, 4, 17) != (0,), True))
    s.run("homology dim", lambda: (ext_dim(4, 17), 1))


def _suite_ext_tables(s: _Suite, stretch: bool) -> None:
    """Homology dimension censuses at the suite bidegrees."""
    for (length, deg), dim in sorted(refdata.EXT_DIMS.items()):
        s.run(f"ext({length},{deg})", lambda a=length, b=deg, v=dim: (
            ext_dim(a, b), v))
    for (length, deg), dim in sorted(refdata.EXT_DIMS_STRETCH.items()):
        if stretch:
            s.run(f"ext({length},{deg})", lambda a=length, b=deg, v=dim: (
                ext_dim(a, b), v))
        else:
            s.skip(f"ext({length},{deg})",
                   "stretch degrees disabled (set COHITLAB_STRETCH=1)")


SUITE_NAMES = (
    "dlc1",
    "dlc2",
    "dlct",
    "dlc3",
    "dlct2",
    "remark26",
    "eq6",
    "exttables",
)

_SUITE_RUNNERS = {
    "dlc1": lambda s, stretch: _suite_family_a(s),
    "dlc2": lambda s, stretch: _suite_family_b(s),
    "dlct": _suite_family_d,
    "dlc3": lambda s, stretch: _suite_family_c(s),
    "dlct2": _suite_family_e,
    "remark26": lambda s, stretch: _suite_peel_identities(s),
    "eq6": lambda s, stretch: _suite_boundary_identity(s),
    "exttables": _suite_ext_tables,
}


def verify_suite(
    name: str,
    config: EngineConfig | None = None,
    stretch: bool = False,
) -> SuiteReport:
    """Run one named suite; unknown names raise ValueError."""
    if name not in _SUITE_RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    suite = _Suite(name, config)
    _SUITE_RUNNERS[name](suite, stretch)
    return suite.report


def verify_all(
    names: tuple[str, ...] = SUITE_NAMES,
    config: EngineConfig | None = None,
    stretch: bool = False,
    jobs: int = 1,
) -> list[SuiteReport]:
    """Run several suites, optionally fanning out over processes.

    Reports come back in the order of ``names`` regardless of job count.
    """
    if jobs <= 1:
        return [verify_suite(n, config, stretch) for n in names]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = {
            n: pool.submit(_suite_job, n, config, stretch) for n in names
        }
        return [futures[n].result() for n in names]


def _suite_job(name: str, config, stretch: bool) -> SuiteReport:
    return verify_suite(name, config, stretch)


# ---------------------------------------------------------------------------
# small helpers used by the suites
# ---------------------------------------------------------------------------


def _annihilated(q: int, terms) -> bool:
    from .steenrod import is_annihilated

    return is_annihilated(DualElement(q, terms))


def _class_coords(q: int, n: int, monomials, config) -> int:
    return cohit.quotient(q, n, config).coordinates(Polynomial(q, monomials))


def _invariant_vector(q: int, n: int, config) -> int:
    report = glaction.invariants(q, n, "gl", config=config)
    assert report.dim == 1
    return report.vectors[0]


def _weight_invariant_ok(q, n, omega, monomials, config) -> bool:
    """The class of the given sum generates the weight-fixed points."""
    report = glaction.invariants(q, n, "gl", omega=omega, config=config)
    if report.dim != 1:
        return False
    data = cohit.quotient(q, n, config)
    full = data.coordinates(Polynomial(q, monomials))
    positions = {m: i for i, m in enumerate(data.basis)}
    proj = 0
    for k, m in enumerate(report.basis_monomials):
        if (full >> positions[m]) & 1:
            proj |= 1 << k
    return proj == report.vectors[0]


def _kameko_kernel_matches(q, n, monomials, config) -> bool:
    """The frozen class list spans the halving-map kernel."""
    km = cohit.kameko_matrix(q, n, config)
    kernel = km.kernel_coordinates()
    ech = echelonize(kernel, km.domain.dim)
    frozen = [
        km.domain.coordinates(Polynomial(q, [m])) for m in monomials
    ]
    if len(frozen) != len(kernel):
        return False
    ech2 = echelonize(frozen, km.domain.dim)
    if ech2.rank != len(kernel) or ech.rank != len(kernel):
        return False
    return all(ech.contains(v) for v in frozen)
