"""Monomial and polynomial bookkeeping for F2[x_1, ..., x_q].

A ``Monomial`` is a tuple of q exponents ``(e_1, ..., e_q)``; the same tuple
type doubles as a ``DualMonomial`` (a product of divided powers
``a_1^(e_1) ... a_q^(e_q)`` in the dual).  A ``WeightVector`` is the tuple
``omega(x) = (omega_1, omega_2, ...)`` where ``omega_i`` counts how many
exponents have bit ``i-1`` set; trailing zeros are trimmed.

The total order on monomials of a fixed degree is: compare weight vectors
left-lexicographically first, then exponent tuples left-lexicographically
(index 1 first).  All basis extraction downstream is phrased in terms of this
order.
"""

from __future__ import annotations

from typing import Iterable

Monomial = tuple[int, ...]
DualMonomial = tuple[int, ...]
WeightVector = tuple[int, ...]

MAX_RANK = 5


def check_rank(q: int) -> None:
    if not 1 <= q <= MAX_RANK:
        raise ValueError(f"number of variables must be between 1 and {MAX_RANK}, got {q}")


def degree(mono: Monomial) -> int:
    return sum(mono)


def alpha(n: int) -> int:
    """Number of ones in the binary expansion of n."""
    if n < 0:
        raise ValueError("alpha is defined for nonnegative integers")
    return n.bit_count()


def mu(n: int) -> int:
    """Smallest m such that n is a sum of m numbers of the form 2^t - 1.

    Equivalently the smallest m with alpha(n + m) <= m.
    """
    if n < 0:
        raise ValueError("mu is defined for nonnegative integers")
    if n == 0:
        return 0
    m = 1
    while alpha(n + m) > m:
        m += 1
    return m


def weight_vector(mono: Monomial) -> WeightVector:
    """omega(x): entry i counts exponents with binary bit i set (trailing zeros trimmed)."""
    if not mono:
        return ()
    bits = max(mono).bit_length()
    w = [0] * bits
    for e in mono:
        i = 0
        while e:
            w[i] += e & 1
            e >>= 1
            i += 1
    while w and w[-1] == 0:
        w.pop()
    return tuple(w)


def weight_degree(w: WeightVector) -> int:
    """Degree of any monomial with weight vector w."""
    return sum(wi << i for i, wi in enumerate(w))


def monomial_key(mono: Monomial) -> tuple[WeightVector, Monomial]:
    """Sort key realizing the weight-then-exponent left-lex order.

    Weight vectors are padded on the right so that left-lex comparison of
    tuples of different lengths is correct for monomials of equal degree.
    """
    w = weight_vector(mono)
    n = degree(mono)
    pad = n.bit_length() + 1
    return (w + (0,) * (pad - len(w)), mono)


def compare(a: Monomial, b: Monomial) -> int:
    """-1, 0, 1 as a <, =, > b in the weight-then-exponent order."""
    if degree(a) != degree(b):
        raise ValueError("monomials must have the same degree to compare")
    ka, kb = monomial_key(a), monomial_key(b)
    return (ka > kb) - (ka < kb)


def enumerate_monomials(q: int, n: int) -> list[Monomial]:
    """All degree-n monomials in q variables, ascending in the monomial order."""
    check_rank(q)
    if n < 0:
        return []
    out: list[Monomial] = []

    def rec(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], n, q)
    out.sort(key=monomial_key)
    return out


def count_monomials(q: int, n: int) -> int:
    """Number of degree-n monomials in q variables: C(n+q-1, q-1)."""
    from math import comb

    return comb(n + q - 1, q - 1)


def is_spike(mono: Monomial) -> bool:
    """True when every exponent has the form 2^t - 1."""
    return all((e & (e + 1)) == 0 for e in mono)


def is_minimal_spike(mono: Monomial) -> bool:
    """True for the canonical minimal spike shape.

    The nonzero exponents must come first, each of the form 2^t - 1, strictly
    decreasing except that the last two may be equal (so an all-equal run of
    length >= 3 never qualifies), and trailing exponents must be zero.
    """
    if not is_spike(mono):
        return False
    nz = [e for e in mono if e]
    if sum(mono) == 0 or not nz:
        return False
    if list(mono[: len(nz)]) != nz:
        return False
    for i in range(len(nz) - 2):
        if nz[i] <= nz[i + 1]:
            return False
    if len(nz) >= 2 and nz[-2] < nz[-1]:
        return False
    return True


def minimal_spike(q: int, n: int) -> Monomial | None:
    """The unique degree-n spike with the minimal-spike shape, or None.

    Exists exactly when mu(n) <= q; it uses mu(n) variables with exponents
    2^{d_1}-1, ..., 2^{d_m}-1 where d_1 > ... > d_{m-1} >= d_m >= 1.
    """
    check_rank(q)
    if n <= 0:
        return None
    m = mu(n)
    if m > q:
        return None

    def rec(remaining: int, slots: int, max_d: int) -> list[int] | None:
        if slots == 0:
            return [] if remaining == 0 else None
        for d in range(max_d, 0, -1):
            part = (1 << d) - 1
            if part > remaining:
                continue
            # all remaining slots could repeat the last value only pairwise:
            # enforce strict decrease except between the final two slots.
            next_max = d if slots == 2 else d - 1
            rest = rec(remaining - part, slots - 1, next_max)
            if rest is not None:
                return [part] + rest
        return None

    parts = rec(n, m, n.bit_length())
    if parts is None:
        return None
    mono = tuple(parts) + (0,) * (q - m)
    assert is_minimal_spike(mono) and degree(mono) == n
    return mono


def generic_degree_decompositions(n: int, q: int) -> list[tuple[int, int, int]]:
    """All (r, s, v) with n = r(2^s - 1) + v 2^s, mu(v) < r < q, s >= 0."""
    check_rank(q)
    out = []
    for r in range(1, q):
        s = 0
        while r * ((1 << s) - 1) <= n:
            rem = n - r * ((1 << s) - 1)
            if rem % (1 << s) == 0:
                v = rem >> s
                if mu(v) < r:
                    out.append((r, s, v))
            s += 1
    return sorted(out)


def mul_monomials(a: Monomial, b: Monomial) -> Monomial:
    if len(a) != len(b):
        raise ValueError("monomials live in different variable counts")
    return tuple(x + y for x, y in zip(a, b))


def format_monomial(mono: Monomial, letter: str = "x") -> str:
    parts = []
    for i, e in enumerate(mono, start=1):
        if e == 0:
            continue
        parts.append(f"{letter}{i}" + (f"^{e}" if e > 1 else ""))
    return " ".join(parts) if parts else "1"


class Polynomial:
    """A homogeneous polynomial over GF(2), stored as a set of monomials."""

    __slots__ = ("q", "monomials")

    def __init__(self, q: int, monomials: Iterable[Monomial] = ()):
        check_rank(q)
        monos = frozenset(tuple(m) for m in monomials)
        degs = {sum(m) for m in monos}
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        for m in monos:
            if len(m) != q or any(e < 0 for e in m):
                raise ValueError(f"bad monomial {m} for q={q}")
        self.q = q
        self.monomials = monos

    @classmethod
    def zero(cls, q: int) -> "Polynomial":
        return cls(q)

    @classmethod
    def variable(cls, q: int, i: int) -> "Polynomial":
        """The variable x_i (1-indexed)."""
        e = [0] * q
        e[i - 1] = 1
        return cls(q, [tuple(e)])

    @property
    def degree(self) -> int | None:
        for m in self.monomials:
            return sum(m)
        return None

    def is_zero(self) -> bool:
        return not self.monomials

    def __xor__(self, other: "Polynomial") -> "Polynomial":
        if self.q != other.q:
            raise ValueError("polynomials live in different variable counts")
        return Polynomial(self.q, self.monomials ^ other.monomials)

    __add__ = __xor__

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.q != other.q:
            raise ValueError("polynomials live in different variable counts")
        acc: set[Monomial] = set()
        for a in self.monomials:
            for b in other.monomials:
                acc ^= {mul_monomials(a, b)}
        return Polynomial(self.q, acc)

    def square(self) -> "Polynomial":
        return Polynomial(self.q, (tuple(2 * e for e in m) for m in self.monomials))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.q == other.q
            and self.monomials == other.monomials
        )

    def __hash__(self) -> int:
        return hash((self.q, self.monomials))

    def __len__(self) -> int:
        return len(self.monomials)

    def sorted_monomials(self) -> list[Monomial]:
        return sorted(self.monomials, key=monomial_key)

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(format_monomial(m) for m in self.sorted_monomials())

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "degree": self.degree,
            "monomials": [list(m) for m in self.sorted_monomials()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        return cls(int(data["q"]), [tuple(m) for m in data["monomials"]])


class DualElement:
    """An element of the divided-power dual, stored as a set of dual monomials."""

    __slots__ = ("q", "terms")

    def __init__(self, q: int, terms: Iterable[DualMonomial] = ()):
        check_rank(q)
        ts = frozenset(tuple(t) for t in terms)
        degs = {sum(t) for t in ts}
        if len(degs) > 1:
            raise ValueError("dual element is not homogeneous")
        for t in ts:
            if len(t) != q or any(e < 0 for e in t):
                raise ValueError(f"bad dual monomial {t} for q={q}")
        self.q = q
        self.terms = ts

    @classmethod
    def zero(cls, q: int) -> "DualElement":
        return cls(q)

    @property
    def degree(self) -> int | None:
        for t in self.terms:
            return sum(t)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __xor__(self, other: "DualElement") -> "DualElement":
        if self.q != other.q:
            raise ValueError("dual elements live in different variable counts")
        return DualElement(self.q, self.terms ^ other.terms)

    __add__ = __xor__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DualElement)
            and self.q == other.q
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.q, self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list[DualMonomial]:
        return sorted(self.terms, key=monomial_key)

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"

        def fmt(t: DualMonomial) -> str:
            return " ".join(f"a{i}({e})" for i, e in enumerate(t, start=1))

        return " + ".join(fmt(t) for t in self.sorted_terms())

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "degree": self.degree,
            "terms": [list(t) for t in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DualElement":
        return cls(int(data["q"]), [tuple(t) for t in data["terms"]])


def pairing(theta: DualElement, f: Polynomial) -> int:
    """The dual-basis pairing <theta, f> in GF(2)."""
    if theta.q != f.q:
        raise ValueError("mismatched variable counts")
    return len(theta.terms & f.monomials) & 1


def parse_weight(text: str) -> WeightVector:
    """Parse a weight vector given as comma-separated entries, e.g. '3,1,1'."""
    w = tuple(int(s) for s in text.split(",") if s.strip() != "")
    if any(x < 0 for x in w):
        raise ValueError("weight entries must be nonnegative")
    while w and w[-1] == 0:
        w = w[:-1]
    return w
