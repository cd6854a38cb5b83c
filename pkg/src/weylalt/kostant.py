"""Kostant partition counting, plain and q-graded, over exact integers.

kostant_partition(rs, xi) counts the ways to write xi as a sum of positive
roots with nonnegative integer multiplicities; kostant_partition_q refines
the count by total number of roots used, returning a polynomial whose q^k
coefficient counts the expressions of k parts.  The zero vector has exactly
one expression (the empty one).

>>> rs = build_root_system(RootSystemSpec("A", 2))
>>> kostant_partition(rs, (1, 1))
2
>>> print(kostant_partition_q(rs, (1, 1)))
q^2 + q
>>> kostant_partition(rs, (0, 0))
1
"""

from __future__ import annotations

from fractions import Fraction

from .rootsys import RootSystem, RootSystemSpec, build_root_system

__all__ = [
    "QPolynomial",
    "kostant_partition",
    "kostant_partition_q",
    "has_partition",
]


class QPolynomial:
    """Integer polynomial in q, stored dense from the constant term up.

    coeffs[k] is the q^k coefficient; trailing zeros are trimmed so equal
    polynomials always store equal tuples.

    >>> QPolynomial((0, -1, 0, 1, 1))
    QPolynomial('q^4 + q^3 - q')
    >>> QPolynomial.monomial(2) - QPolynomial.monomial(0)
    QPolynomial('q^2 - 1')
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = tuple(int(c) for c in coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> "QPolynomial":
        return cls((0,) * power + (coefficient,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def evaluate(self, value=1):
        total = 0
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial(
            tuple(x + y for x, y in zip(a, b)) + a[len(b):]
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                q = "q" if k == 1 else f"q^{k}"
                body = q if magnitude == 1 else f"{magnitude}{q}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"QPolynomial({str(self)!r})"


def _integer_coordinates(rs: RootSystem, xi):
    """Exact integer coordinates of xi, or None when some entry is fractional."""
    if len(xi) != rs.rank:
        raise ValueError(f"expected a vector of length {rs.rank}, got {len(xi)}")
    out = []
    for c in xi:
        value = Fraction(c)
        if value.denominator != 1:
            return None
        out.append(int(value))
    return tuple(out)


def _count(roots, target) -> int:
    """Expressions of target using roots[k:] in order, root k first.

    Memoized on (k, residual); each root may repeat, and the fixed processing
    order means each multiset is counted once.
    """
    memo: dict = {}

    def rec(k: int, res) -> int:
        if not any(res):
            return 1
        if k == len(roots):
            return 0
        key = (k, res)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = rec(k + 1, res)
        root = roots[k]
        sub = tuple(a - b for a, b in zip(res, root))
        if all(c >= 0 for c in sub):
            total += rec(k, sub)
        memo[key] = total
        return total

    return rec(0, target)


def _count_q(roots, target) -> tuple[int, ...]:
    """Like _count but graded by the number of parts; returns raw coefficients."""
    memo: dict = {}

    def rec(k: int, res) -> tuple[int, ...]:
        if not any(res):
            return (1,)
        if k == len(roots):
            return ()
        key = (k, res)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = rec(k + 1, res)
        root = roots[k]
        sub = tuple(a - b for a, b in zip(res, root))
        if all(c >= 0 for c in sub):
            used_again = rec(k, sub)
            if used_again:
                shifted = (0,) + used_again
                if len(total) < len(shifted):
                    total, shifted = shifted, total
                total = tuple(
                    x + y for x, y in zip(total, shifted)
                ) + total[len(shifted):]
        memo[key] = total
        return total

    return rec(0, target)


def kostant_partition(rs: RootSystem, xi) -> int:
    """Number of expressions of xi as a nonnegative integer sum of positive roots.

    Vectors with a fractional or negative coordinate have no expression and
    count 0; the zero vector counts 1.

    >>> rs = build_root_system(RootSystemSpec("A", 3))
    >>> kostant_partition(rs, (1, 1, 1))
    4
    >>> kostant_partition(rs, (-1, 0, 0))
    0
    """
    coords = _integer_coordinates(rs, xi)
    if coords is None or any(c < 0 for c in coords):
        return 0
    return _count(rs.positive_roots, coords)


def kostant_partition_q(rs: RootSystem, xi) -> QPolynomial:
    """The q-graded refinement: the q^k coefficient counts k-part expressions.

    >>> rs = build_root_system(RootSystemSpec("A", 3))
    >>> print(kostant_partition_q(rs, (1, 1, 1)))
    q^3 + 2q^2 + q
    >>> print(kostant_partition_q(rs, (0, 0, 0)))
    1
    """
    coords = _integer_coordinates(rs, xi)
    if coords is None or any(c < 0 for c in coords):
        return QPolynomial()
    return QPolynomial(_count_q(rs.positive_roots, coords))


def has_partition(rs: RootSystem, xi) -> bool:
    """Decide kostant_partition(rs, xi) > 0 without counting.

    The simple roots are themselves positive roots, so any vector with
    nonnegative integer coordinates has at least the expression using only
    simple roots; conversely every expression forces nonnegative integer
    coordinates.  Membership tests over large groups stay cheap this way.

    >>> rs = build_root_system(RootSystemSpec("A", 3))
    >>> has_partition(rs, (0, 1, 2))
    True
    >>> has_partition(rs, (0, Fraction(1, 2), 0))
    False
    """
    coords = _integer_coordinates(rs, xi)
    return coords is not None and all(c >= 0 for c in coords)
