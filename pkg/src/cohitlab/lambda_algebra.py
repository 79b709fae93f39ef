"""The mod-2 lambda algebra: admissible words, rewriting, differential, homology.

Words ``(j_1, ..., j_s)`` stand for products ``l_{j_1} ... l_{j_s}`` of the
degree-j generators; the pair ``(a, b)`` of adjacent indices is *admissible*
when ``a <= 2b``, and the admissible words form a vector-space basis.  An
inadmissible pair rewrites as

    l_a l_b  =  sum_{j >= 0} C(n-1-j, j) l_{2b+1+j} l_{a-b-1-j},   n = a-2b-1,

(binomials mod 2, empty when a = 2b+1), and the differential is

    d(l_m)  =  sum_{j >= 1} C(m-j, j) l_{j-1} l_{m-j},

extended as a derivation.  The differential raises word length by one and
lowers the internal degree (the index sum) by one; the homology of
``(length s, index sum n)`` computes the degree-(s, s+n) derived functors of
GF(2) over the Steenrod algebra, so ``ext_dim(s, n)`` below is the dimension
of that trigraded piece.

``psi`` sends a product of divided powers ``a_1^(j_1) ... a_q^(j_q)`` to
``sum_{k >= j_1} l_k psi(a_2^(j_2) ... a_q^(j_q) . Sq^{k - j_1})`` with
``psi(a^(j)) = l_j``; on classes killed by all positive squares it lands in
cycles and induces the algebraic transfer.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .f2linalg import BitMatrix, EchelonForm, echelonize, lsb, solve_modulo
from .polyspace import DualElement
from .steenrod import binom_odd, sq_dual_term

Word = tuple[int, ...]

# Generous guard for runaway rewriting; never reached in supported degrees.
MAX_REWRITES = 10_000_000
_rewrite_count = 0


class RewriteBudget(RuntimeError):
    """Raised if a single reduction exceeds MAX_REWRITES pair rewrites."""


def word_degree(word: Word) -> int:
    return sum(word)


def is_admissible(word: Word) -> bool:
    return all(a <= 2 * b for a, b in zip(word, word[1:]))


@lru_cache(maxsize=None)
def adem_pair(a: int, b: int) -> frozenset[Word]:
    """Admissible-direction expansion of one inadmissible pair l_a l_b."""
    if a <= 2 * b:
        raise ValueError(f"pair ({a}, {b}) is already admissible")
    n = a - 2 * b - 1
    out = set()
    for j in range(0, (n - 1) // 2 + 1):
        if binom_odd(n - 1 - j, j):
            out.add((2 * b + 1 + j, a - b - 1 - j))
    return frozenset(out)


def _leftmost_inadmissible(word: Word) -> int | None:
    for i in range(len(word) - 1):
        if word[i] > 2 * word[i + 1]:
            return i
    return None


@lru_cache(maxsize=None)
def _reduce_word(word: Word) -> frozenset[Word]:
    """Admissible form of a single word, as a set of admissible words."""
    global _rewrite_count
    i = _leftmost_inadmissible(word)
    if i is None:
        return frozenset([word])
    _rewrite_count += 1
    if _rewrite_count > MAX_REWRITES:
        raise RewriteBudget(f"more than {MAX_REWRITES} pair rewrites")
    acc: set[Word] = set()
    head, tail = word[:i], word[i + 2 :]
    for c, d in adem_pair(word[i], word[i + 1]):
        acc ^= _reduce_word(head + (c, d) + tail)
    return frozenset(acc)


class LambdaElement:
    """A homogeneous element, stored as a set of words (not necessarily admissible)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Word] = ()):
        ts = frozenset(tuple(w) for w in terms)
        shapes = {(len(w), sum(w)) for w in ts}
        if len(shapes) > 1:
            raise ValueError("element mixes word lengths or degrees")
        for w in ts:
            if any(j < 0 for j in w):
                raise ValueError(f"negative index in word {w}")
        self.terms = ts

    @classmethod
    def zero(cls) -> "LambdaElement":
        return cls()

    @property
    def length(self) -> int | None:
        for w in self.terms:
            return len(w)
        return None

    @property
    def internal_degree(self) -> int | None:
        for w in self.terms:
            return sum(w)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __xor__(self, other: "LambdaElement") -> "LambdaElement":
        if not self.terms:
            return other
        if not other.terms:
            return self
        if (self.length, self.internal_degree) != (
            other.length,
            other.internal_degree,
        ):
            raise ValueError("cannot add inhomogeneous elements")
        return LambdaElement(self.terms ^ other.terms)

    __add__ = __xor__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LambdaElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_words(self) -> list[Word]:
        return sorted(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            "*".join(f"l{j}" for j in w) if w else "1" for w in self.sorted_words()
        )

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "internal_degree": self.internal_degree,
            "terms": [list(w) for w in self.sorted_words()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LambdaElement":
        return cls(tuple(w) for w in data["terms"])


def from_words(*words: Iterable[int]) -> LambdaElement:
    return LambdaElement(tuple(w) for w in words)


def adem_reduce(el: LambdaElement) -> LambdaElement:
    """Rewrite into the admissible basis (leftmost inadmissible pair first)."""
    acc: set[Word] = set()
    for w in el.terms:
        acc ^= _reduce_word(w)
    return LambdaElement(acc)


@lru_cache(maxsize=None)
def _d_generator(m: int) -> frozenset[Word]:
    out = set()
    for j in range(1, m + 1):
        if binom_odd(m - j, j):
            out.add((j - 1, m - j))
    return frozenset(out)


def differential(el: LambdaElement) -> LambdaElement:
    """The derivation with d(l_m) = sum C(m-j, j) l_{j-1} l_{m-j}; reduced output."""
    acc: set[Word] = set()
    for w in el.terms:
        for i, m in enumerate(w):
            head, tail = w[:i], w[i + 1 :]
            for pair in _d_generator(m):
                acc ^= {head + pair + tail}
    out = LambdaElement(acc)
    return adem_reduce(out)


def is_cycle(el: LambdaElement) -> bool:
    return differential(el).is_zero()


@lru_cache(maxsize=None)
def admissible_basis(s: int, n: int) -> tuple[Word, ...]:
    """Admissible words of length s and index sum n, lexicographically sorted."""
    if s < 0 or n < 0:
        return ()
    if s == 0:
        return ((),) if n == 0 else ()

    out: list[Word] = []

    def rec(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            last = remaining
            if not prefix or prefix[-1] <= 2 * last:
                out.append(tuple(prefix + [last]))
            return
        lo = 0 if not prefix else (prefix[-1] + 1) // 2
        for j in range(lo, remaining + 1):
            # remaining slots each need at least half the previous index;
            # a cheap feasibility cut keeps the search shallow.
            rec(prefix + [j], remaining - j, slots - 1)

    rec([], n, s)
    out.sort()
    return tuple(out)


class _Coordinates:
    """Bit coordinates over the admissible basis of one (length, degree)."""

    def __init__(self, s: int, n: int):
        self.s, self.n = s, n
        self.basis = admissible_basis(s, n)
        self.index = {w: i for i, w in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vector(self, el: LambdaElement) -> int:
        red = adem_reduce(el)
        v = 0
        for w in red.terms:
            v ^= 1 << self.index[w]
        return v

    def element(self, bits: int) -> LambdaElement:
        words = []
        while bits:
            p = lsb(bits)
            bits ^= 1 << p
            words.append(self.basis[p])
        return LambdaElement(words)


@lru_cache(maxsize=None)
def _coords(s: int, n: int) -> _Coordinates:
    return _Coordinates(s, n)


@lru_cache(maxsize=None)
def _boundary_echelon(s: int, n: int) -> EchelonForm:
    """Echelonized image of d inside (length s, degree n) coordinates."""
    target = _coords(s, n)
    ech = EchelonForm(target.dim)
    for w in admissible_basis(s - 1, n + 1):
        ech.add(target.vector(differential(LambdaElement([w]))))
    return ech


def boundary_space(s: int, n: int) -> list[LambdaElement]:
    """A basis of the boundaries inside (length s, degree n)."""
    target = _coords(s, n)
    ech = _boundary_echelon(s, n)
    return [target.element(row) for _, row in sorted(ech.rows.items())]


@lru_cache(maxsize=None)
def _cycle_vectors(s: int, n: int) -> tuple[int, ...]:
    """Kernel of d on (length s, degree n), as admissible-coordinate vectors."""
    source = _coords(s, n)
    target = _coords(s + 1, n - 1)
    images = [
        target.vector(differential(LambdaElement([w]))) for w in source.basis
    ]
    constraints = BitMatrix(target.dim, images).transpose()
    return tuple(echelonize(constraints.rows, source.dim).kernel_basis())


def homology_basis(s: int, n: int) -> list[LambdaElement]:
    """Cycle representatives of a basis of the homology at (length s, degree n)."""
    if s == 0:
        return [LambdaElement([()])] if n == 0 else []
    source = _coords(s, n)
    boundaries = _boundary_echelon(s, n)
    chosen: list[LambdaElement] = []
    ech = EchelonForm(source.dim)
    for piv in sorted(boundaries.rows):
        ech.add(boundaries.rows[piv])
    for v in _cycle_vectors(s, n):
        if ech.add(v):
            chosen.append(source.element(v))
    return chosen


def ext_dim(s: int, n: int) -> int:
    """Dimension of the homology at (length s, internal degree n)."""
    if s == 0:
        return 1 if n == 0 else 0
    if n < 0:
        return 0
    return len(_cycle_vectors(s, n)) - _boundary_echelon(s, n).rank


def classes_equal(x: LambdaElement, y: LambdaElement) -> bool:
    """Whether two cycles are homologous; raises on non-cycles."""
    for el, name in ((x, "left"), (y, "right")):
        if not el.is_zero() and not is_cycle(el):
            raise ValueError(f"{name} element is not a cycle")
    diff = adem_reduce(x ^ y)
    if diff.is_zero():
        return True
    s, n = diff.length, diff.internal_degree
    return _boundary_echelon(s, n).contains(_coords(s, n).vector(diff))


def homology_coordinates(el: LambdaElement, s: int, n: int) -> tuple[int, ...]:
    """Coefficients of a cycle over homology_basis(s, n), modulo boundaries.

    The bidegree is passed explicitly so the zero element resolves; raises on
    non-cycles and on elements of the wrong bidegree.
    """
    el = adem_reduce(el)
    if not el.is_zero():
        if (el.length, el.internal_degree) != (s, n):
            raise ValueError(
                f"element has bidegree {(el.length, el.internal_degree)}, "
                f"expected {(s, n)}"
            )
        if not is_cycle(el):
            raise ValueError("element is not a cycle")
    coords = _coords(s, n)
    reps = [coords.vector(h) for h in homology_basis(s, n)]
    solution = solve_modulo(
        coords.vector(el), reps, _boundary_echelon(s, n).rows.values(), coords.dim
    )
    assert solution is not None, "cycle escaped the homology decomposition"
    return solution


# -- the divided-power to lambda transfer map -----------------------------------


@lru_cache(maxsize=None)
def _psi_term(term: tuple[int, ...]) -> frozenset[Word]:
    if len(term) == 1:
        return frozenset([(term[0],)])
    j1, rest = term[0], term[1:]
    acc: set[Word] = set()
    for t in range(0, sum(rest) // 2 + 1):
        k = j1 + t
        for sub in sq_dual_term(t, rest):
            for w in _psi_term(sub):
                acc ^= {(k,) + w}
    return frozenset(acc)


def psi(theta: DualElement) -> LambdaElement:
    """The chain-level transfer on divided powers, in admissible form."""
    acc: set[Word] = set()
    for term in theta.terms:
        acc ^= _psi_term(term)
    return adem_reduce(LambdaElement(acc))


def clear_caches() -> None:
    global _rewrite_count
    _rewrite_count = 0
    _reduce_word.cache_clear()
    adem_pair.cache_clear()
    _d_generator.cache_clear()
    admissible_basis.cache_clear()
    _coords.cache_clear()
    _boundary_echelon.cache_clear()
    _cycle_vectors.cache_clear()
    _psi_term.cache_clear()
