"""Steenrod squares on F2[x_1..x_q], their dual action, and hit spans.

The left action on polynomials follows the Cartan rule: on a monomial,
``Sq^t(x^e) = sum over (d_1 + ... + d_q = t) of prod C(e_i, d_i) x^(e + d)``
with binomials mod 2, so a term survives exactly when every ``d_i`` is a
binary submask of ``e_i`` (Lucas).

The right action on the divided-power dual is
``(a^(m)) Sq^t = C(m - t, t) a^(m - t)`` on one factor, extended by the
Cartan rule across factors.  It is adjoint to the left action under the
monomial/divided-monomial pairing.

A ``HitSpan`` is the echelonized subspace of degree-n polynomials of the form
``sum Sq^{2^i}(g_i)`` ("hit" elements); the ``Sq^{2^i}`` suffice because they
generate the whole algebra of squares.  Columns are ordered with the largest
monomial first (weight-then-exponent order), which makes the non-pivot
columns a canonical basis of the quotient and respects the weight filtration
block by block.
"""

from __future__ import annotations

from .f2linalg import EchelonForm, lsb
from .polyspace import (
    DualElement,
    Monomial,
    Polynomial,
    WeightVector,
    check_rank,
    enumerate_monomials,
    weight_vector,
)


def binom_odd(a: int, b: int) -> bool:
    """True when C(a, b) is odd (zero outside 0 <= b <= a)."""
    if b < 0 or b > a:
        return False
    return (b & (a - b)) == 0


def _submasks_upto(e: int, cap: int):
    """All binary submasks d of e with d <= cap."""
    d = e
    while True:
        if d <= cap:
            yield d
        if d == 0:
            return
        d = (d - 1) & e


def sq_monomial(t: int, mono: Monomial) -> list[Monomial]:
    """Terms of Sq^t applied to a single monomial (no cancellation occurs)."""
    if t < 0:
        raise ValueError("negative Steenrod square")
    if t == 0:
        return [mono]
    q = len(mono)
    out: list[Monomial] = []
    deltas: list[int] = [0] * q
    suffix_total = [0] * (q + 1)
    for i in range(q - 1, -1, -1):
        suffix_total[i] = suffix_total[i + 1] + mono[i]

    def rec(i: int, remaining: int) -> None:
        if i == q:
            if remaining == 0:
                out.append(tuple(e + d for e, d in zip(mono, deltas)))
            return
        if remaining > suffix_total[i]:
            return
        for d in _submasks_upto(mono[i], remaining):
            deltas[i] = d
            rec(i + 1, remaining - d)
        deltas[i] = 0

    rec(0, t)
    return out


def sq(t: int, f: Polynomial) -> Polynomial:
    """Left Steenrod square Sq^t on a homogeneous polynomial."""
    acc: set[Monomial] = set()
    for m in f.monomials:
        acc ^= set(sq_monomial(t, m))
    return Polynomial(f.q, acc)


def sq_dual_term(t: int, term: Monomial) -> list[Monomial]:
    """Terms of (a^(term)) Sq^t in the divided-power dual (no cancellation)."""
    if t < 0:
        raise ValueError("negative Steenrod square")
    if t == 0:
        return [term]
    q = len(term)
    out: list[Monomial] = []
    deltas: list[int] = [0] * q

    def rec(i: int, remaining: int) -> None:
        if i == q:
            if remaining == 0:
                out.append(tuple(e - d for e, d in zip(term, deltas)))
            return
        e = term[i]
        for d in range(min(remaining, e // 2) + 1):
            if binom_odd(e - d, d):
                deltas[i] = d
                rec(i + 1, remaining - d)
        deltas[i] = 0

    rec(0, t)
    return out


def sq_dual(t: int, theta: DualElement) -> DualElement:
    """Right Steenrod action on a dual element."""
    acc: set[Monomial] = set()
    for term in theta.terms:
        acc ^= set(sq_dual_term(t, term))
    return DualElement(theta.q, acc)


def is_annihilated(theta: DualElement) -> bool:
    """True when (theta) Sq^t = 0 for every t > 0.

    Checking t = 2^i suffices because those generate all squares and the
    right action is an algebra action.
    """
    n = theta.degree
    if n is None or n == 0:
        return True
    i = 1
    while i <= n:
        if not sq_dual(i, theta).is_zero():
            return False
        i <<= 1
    return True


class HitSpan:
    """Echelonized span of the hit elements in one degree.

    ``columns`` lists the degree-n monomials in decreasing monomial order, so
    pivots eliminate the largest monomial of each row and every stored row is
    "pivot + strictly smaller terms".  ``restrict_weight`` drops all columns
    of weight strictly below the given weight vector (callers must ensure the
    dropped monomials are hit, e.g. by the minimal-spike criterion; rows are
    then projected onto the surviving columns, which presents the same
    quotient).
    """

    def __init__(
        self,
        q: int,
        n: int,
        generators: str = "powers",
        restrict_weight: WeightVector | None = None,
    ):
        check_rank(q)
        if n < 0:
            raise ValueError("degree must be nonnegative")
        if generators not in ("powers", "all"):
            raise ValueError("generators must be 'powers' or 'all'")
        self.q = q
        self.n = n
        self.generators = generators
        self.restrict_weight = restrict_weight
        cols = enumerate_monomials(q, n)
        if restrict_weight is not None:
            bound = _padded(restrict_weight, n)
            cols = [m for m in cols if _padded(weight_vector(m), n) >= bound]
        cols.reverse()  # largest first: column 0 is the most senior monomial
        self.columns: tuple[Monomial, ...] = tuple(cols)
        self.position: dict[Monomial, int] = {m: i for i, m in enumerate(cols)}
        self.echelon = EchelonForm(len(cols))
        self._build()

    def _operation_degrees(self) -> list[int]:
        if self.generators == "all":
            return list(range(1, self.n + 1))
        out = []
        t = 1
        while t <= self.n:
            out.append(t)
            t <<= 1
        return out

    def _build(self) -> None:
        pos = self.position
        ech = self.echelon
        for t in self._operation_degrees():
            source_degree = self.n - t
            if source_degree < 0:
                continue
            for g in enumerate_monomials(self.q, source_degree):
                row = 0
                for m in sq_monomial(t, g):
                    p = pos.get(m)
                    if p is not None:
                        row ^= 1 << p
                if row:
                    ech.add(row)

    # -- vector conversions -------------------------------------------------

    def to_vector(self, f: Polynomial) -> int:
        """Project a polynomial onto the column space (restricted columns drop)."""
        if f.q != self.q or (f.degree not in (None, self.n)):
            raise ValueError("polynomial does not live in this degree")
        v = 0
        pos = self.position
        for m in f.monomials:
            p = pos.get(m)
            if p is None:
                if self.restrict_weight is None:
                    raise KeyError(f"monomial {m} outside column space")
            else:
                v ^= 1 << p
        return v

    def dual_to_vector(self, theta: DualElement) -> int:
        """Bit-vector of a dual element over the same column layout."""
        if theta.q != self.q or (theta.degree not in (None, self.n)):
            raise ValueError("dual element does not live in this degree")
        v = 0
        pos = self.position
        for t in theta.terms:
            # duals of the (possibly restricted) quotient must pair to zero
            # with dropped monomials, so every term must be a live column.
            v ^= 1 << pos[t]
        return v

    def to_polynomial(self, bits: int) -> Polynomial:
        monos = []
        while bits:
            p = lsb(bits)
            bits ^= 1 << p
            monos.append(self.columns[p])
        return Polynomial(self.q, monos)

    def to_dual(self, bits: int) -> DualElement:
        terms = []
        while bits:
            p = lsb(bits)
            bits ^= 1 << p
            terms.append(self.columns[p])
        return DualElement(self.q, terms)

    # -- queries -------------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.echelon.rank

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def is_hit(self, f: Polynomial) -> bool:
        return self.echelon.contains(self.to_vector(f))

    def normal_form(self, f: Polynomial) -> Polynomial:
        """Canonical representative of [f]: supported on admissible monomials."""
        return self.to_polynomial(self.echelon.normal_form(self.to_vector(f)))

    def admissible_positions(self) -> list[int]:
        return [p for p in range(self.ncols) if p not in self.echelon.rows]

    def admissible_monomials(self) -> list[Monomial]:
        """Basis monomials of the quotient, ascending in the monomial order."""
        out = [self.columns[p] for p in self.admissible_positions()]
        out.reverse()
        return out

    def weight_table(self) -> dict[WeightVector, tuple[int, int]]:
        """Per weight vector: (number of columns, number of pivots)."""
        table: dict[WeightVector, list[int]] = {}
        for p, m in enumerate(self.columns):
            w = weight_vector(m)
            entry = table.setdefault(w, [0, 0])
            entry[0] += 1
            if p in self.echelon.rows:
                entry[1] += 1
        return {w: (c, r) for w, (c, r) in table.items()}

    def primitive_vectors(self) -> list[int]:
        """Kernel of the hit span: bit-vectors orthogonal to every hit row."""
        return self.echelon.kernel_basis()

    def primitive_basis(self) -> list[DualElement]:
        """Dual elements annihilated by every positive Steenrod square."""
        return [self.to_dual(v) for v in self.primitive_vectors()]


def _padded(w: WeightVector, n: int) -> tuple[int, ...]:
    pad = n.bit_length() + 1
    return tuple(w) + (0,) * (pad - len(w))


_SPAN_CACHE: dict[tuple, HitSpan] = {}


def hit_span(
    q: int,
    n: int,
    generators: str = "powers",
    restrict_weight: WeightVector | None = None,
) -> HitSpan:
    """Memoized hit span for one (q, n); see :class:`HitSpan`."""
    key = (q, n, generators, restrict_weight)
    span = _SPAN_CACHE.get(key)
    if span is None:
        span = HitSpan(q, n, generators, restrict_weight)
        _SPAN_CACHE[key] = span
    return span


def clear_cache() -> None:
    _SPAN_CACHE.clear()


def is_hit(f: Polynomial) -> bool:
    """True when f is a sum of positive Steenrod squares of lower classes."""
    n = f.degree
    if n is None:
        return True
    return hit_span(f.q, n).is_hit(f)


def primitive_basis(q: int, n: int) -> list[DualElement]:
    """Basis of the degree-n dual classes killed by every positive square."""
    return hit_span(q, n).primitive_basis()
