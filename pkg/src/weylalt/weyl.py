"""Weyl group elements as exact integer matrices on the root lattice.

An element is stored by its images matrix: column j holds sigma(alpha_{j+1})
in simple-root coordinates, so two elements are equal exactly when their
matrices agree.  Each element also carries one reduced word as a witness.
Words are tuples of 1-based generator indices read as function composition:
from_word((1, 2)) sends v to s_1(s_2(v)).

Length bookkeeping never walks the group: the length of sigma equals the
number of positive roots sent negative, and ascent tests read off matrix
column signs (sigma(alpha_i) is a root, so its coordinates share one sign).

>>> rs = build_root_system(RootSystemSpec("A", 3))
>>> s13 = from_word(rs, (1, 3))
>>> s13.length
2
>>> word_text(from_word(rs, (1, 1)).word)
'e'
>>> act(rs, s13, rs.highest_root)
(0, 1, 0)
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache

from .rootsys import RootSystem, RootSystemSpec, build_root_system, dynkin_neighbors

__all__ = [
    "WeylElement",
    "GroupSizeError",
    "DEFAULT_GROUP_CAP",
    "identity",
    "from_word",
    "multiply",
    "inverse",
    "act",
    "right_covers",
    "left_covers",
    "right_descents",
    "left_descents",
    "influence",
    "extended_influence",
    "connected_influence",
    "independent",
    "enumerate_group",
    "all_reduced_words",
    "group_order",
    "parse_word",
    "word_text",
]

Matrix = tuple[tuple[int, ...], ...]

DEFAULT_GROUP_CAP = 50_000
_CAP_ENV = "WEYLALT_MAX_GROUP"


class GroupSizeError(RuntimeError):
    """Raised when a full group enumeration would exceed the configured cap."""


@dataclass(frozen=True, eq=False)
class WeylElement:
    """One group element: images matrix, a reduced-word witness, its length.

    Equality and hashing look only at the matrix; the witness is whichever
    reduced word the constructor saw first, and any two reduced words of the
    same element are interchangeable for everything computed here.
    """

    images: Matrix
    word: tuple[int, ...]
    length: int

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"WeylElement({word_text(self.word)!r})"


def _identity_matrix(rank: int) -> Matrix:
    return tuple(
        tuple(int(m == j) for m in range(rank)) for j in range(rank)
    )


@lru_cache(maxsize=None)
def _simple_matrices(rs: RootSystem) -> tuple[Matrix, ...]:
    """Images matrices of the simple reflections, 0-based by generator."""
    r = rs.rank
    out = []
    for i in range(r):
        cols = []
        for j in range(r):
            col = [int(m == j) for m in range(r)]
            col[i] -= rs.cartan[j][i]
            cols.append(tuple(col))
        out.append(tuple(cols))
    return tuple(out)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Composition a after b: column j of the result is a applied to b's column j."""
    r = len(a)
    cols = []
    for j in range(r):
        bcol = b[j]
        col = [0] * r
        for k in range(r):
            coefficient = bcol[k]
            if coefficient:
                acol = a[k]
                for m in range(r):
                    if acol[m]:
                        col[m] += coefficient * acol[m]
        cols.append(tuple(col))
    return tuple(cols)


def _mat_act(m: Matrix, v):
    r = len(m)
    out = [0] * r
    for j in range(r):
        coefficient = v[j]
        if coefficient:
            col = m[j]
            for k in range(r):
                if col[k]:
                    out[k] = out[k] + coefficient * col[k]
    return tuple(out)


def _column_nonneg(col) -> bool:
    return all(c >= 0 for c in col)


def _inversion_count(rs: RootSystem, m: Matrix) -> int:
    """Number of positive roots sent negative; equals the Coxeter length."""
    count = 0
    for root in rs.positive_roots:
        image = _mat_act(m, root)
        if any(c < 0 for c in image):
            count += 1
    return count


def _word_matrix(rs: RootSystem, word) -> Matrix:
    smats = _simple_matrices(rs)
    m = _identity_matrix(rs.rank)
    for i in word:
        m = _mat_mul(m, smats[i - 1])
    return m


def _element_from_matrix(rs: RootSystem, m: Matrix, m_inv: Matrix) -> WeylElement:
    """Build the canonical element for a matrix, given its inverse matrix.

    The witness is rebuilt by greedy descent on the smallest generator, which
    is also the lexicographically least reduced word.
    """
    length = _inversion_count(rs, m)
    smats = _simple_matrices(rs)
    word = []
    cur, cur_inv = m, m_inv
    for _ in range(length):
        i = next(
            k for k in range(rs.rank) if not _column_nonneg(cur_inv[k])
        )
        word.append(i + 1)
        cur = _mat_mul(smats[i], cur)
        cur_inv = _mat_mul(cur_inv, smats[i])
    return WeylElement(images=m, word=tuple(word), length=length)


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(images=_identity_matrix(rs.rank), word=(), length=0)


def from_word(rs: RootSystem, word) -> WeylElement:
    """Element for a word of 1-based generator indices.

    A reduced input is kept as the stored witness; a non-reduced one is
    replaced by the lexicographically least reduced word for the product.

    >>> rs = build_root_system(RootSystemSpec("A", 3))
    >>> from_word(rs, (2, 1, 2)) == from_word(rs, (1, 2, 1))
    True
    >>> from_word(rs, (1, 2, 1, 2)).word
    (2, 1)
    """
    word = tuple(word)
    for i in word:
        if not isinstance(i, int) or not 1 <= i <= rs.rank:
            raise ValueError(f"generator index {i!r} out of range 1..{rs.rank}")
    m = _word_matrix(rs, word)
    length = _inversion_count(rs, m)
    if length == len(word):
        return WeylElement(images=m, word=word, length=length)
    return _element_from_matrix(rs, m, _word_matrix(rs, reversed(word)))


def multiply(rs: RootSystem, *elements: WeylElement) -> WeylElement:
    """Compose elements left to right (the leftmost acts last).

    >>> rs = build_root_system(RootSystemSpec("A", 2))
    >>> multiply(rs, from_word(rs, (1,)), from_word(rs, (1,))).length
    0
    """
    if not elements:
        raise ValueError("multiply needs at least one element")
    m = elements[0].images
    for e in elements[1:]:
        m = _mat_mul(m, e.images)
    joined = tuple(i for e in elements for i in e.word)
    length = _inversion_count(rs, m)
    if length == len(joined):
        return WeylElement(images=m, word=joined, length=length)
    return _element_from_matrix(rs, m, _word_matrix(rs, reversed(joined)))


def inverse(rs: RootSystem, sigma: WeylElement) -> WeylElement:
    m_inv = _word_matrix(rs, reversed(sigma.word))
    return _element_from_matrix(rs, m_inv, sigma.images)


def act(rs: RootSystem, sigma: WeylElement, w):
    """Apply sigma to a weight in simple-root coordinates."""
    if len(w) != rs.rank:
        raise ValueError(f"expected a vector of length {rs.rank}, got {len(w)}")
    return _mat_act(sigma.images, w)


def right_descents(rs: RootSystem, sigma: WeylElement) -> tuple[int, ...]:
    """Generators i with length(sigma s_i) < length(sigma)."""
    return tuple(
        i + 1 for i in range(rs.rank) if not _column_nonneg(sigma.images[i])
    )


def left_descents(rs: RootSystem, sigma: WeylElement) -> tuple[int, ...]:
    m_inv = _word_matrix(rs, reversed(sigma.word))
    return tuple(
        i + 1 for i in range(rs.rank) if not _column_nonneg(m_inv[i])
    )


def right_covers(rs: RootSystem, sigma: WeylElement) -> tuple[WeylElement, ...]:
    """Elements sigma s_i one step above sigma in the right weak order.

    sigma s_i covers sigma exactly when sigma(alpha_i) is positive, which is
    a column-sign test on the images matrix.

    >>> rs = build_root_system(RootSystemSpec("A", 3))
    >>> [word_text(t.word) for t in right_covers(rs, from_word(rs, (1, 3)))]
    ['s1 s3 s2']
    """
    smats = _simple_matrices(rs)
    out = []
    for i in range(rs.rank):
        if _column_nonneg(sigma.images[i]):
            out.append(
                WeylElement(
                    images=_mat_mul(sigma.images, smats[i]),
                    word=sigma.word + (i + 1,),
                    length=sigma.length + 1,
                )
            )
    return tuple(out)


def left_covers(rs: RootSystem, sigma: WeylElement) -> tuple[WeylElement, ...]:
    """Elements s_i sigma one step above sigma in the left weak order."""
    smats = _simple_matrices(rs)
    m_inv = _word_matrix(rs, reversed(sigma.word))
    out = []
    for i in range(rs.rank):
        if _column_nonneg(m_inv[i]):
            out.append(
                WeylElement(
                    images=_mat_mul(smats[i], sigma.images),
                    word=(i + 1,) + sigma.word,
                    length=sigma.length + 1,
                )
            )
    return tuple(out)


def influence(sigma: WeylElement) -> frozenset[int]:
    """Generator indices appearing in a reduced word for sigma.

    The set does not depend on which reduced word is chosen (braid and
    commutation moves preserve it), so reading the stored witness is safe.

    >>> rs = build_root_system(RootSystemSpec("A", 7))
    >>> sorted(influence(from_word(rs, (4, 6, 7))))
    [4, 6, 7]
    """
    return frozenset(sigma.word)


def extended_influence(rs: RootSystem, sigma: WeylElement) -> frozenset[int]:
    """The influence together with its Dynkin-diagram neighbors.

    >>> rs = build_root_system(RootSystemSpec("A", 7))
    >>> sorted(extended_influence(rs, from_word(rs, (1, 2))))
    [1, 2, 3]
    """
    base = influence(sigma)
    grown = set(base)
    for i in base:
        grown.update(dynkin_neighbors(rs, i))
    return frozenset(grown)


def connected_influence(rs: RootSystem, sigma: WeylElement) -> bool:
    """Whether the influence spans a connected piece of the Dynkin diagram.

    The empty influence (the identity) counts as connected.
    """
    nodes = influence(sigma)
    if not nodes:
        return True
    seen = set()
    stack = [min(nodes)]
    while stack:
        i = stack.pop()
        if i in seen:
            continue
        seen.add(i)
        for j in dynkin_neighbors(rs, i):
            if j in nodes and j not in seen:
                stack.append(j)
    return seen == set(nodes)


def independent(rs: RootSystem, sigma: WeylElement, tau: WeylElement) -> bool:
    """True when the influences of sigma and tau neither meet nor touch.

    Equivalent to influence(sigma) being disjoint from the extended
    influence of tau; the relation is symmetric, and independent elements
    commute.
    """
    return not (influence(sigma) & extended_influence(rs, tau))


def group_order(system: RootSystem | RootSystemSpec) -> int:
    """Order of the Weyl group, by the classical product formulas.

    Accepts either a built root system or its defining spec.
    """
    spec = getattr(system, "spec", system)
    r = spec.rank
    if spec.family == "A":
        return math.factorial(r + 1)
    if spec.family in ("B", "C"):
        return 2**r * math.factorial(r)
    return 2 ** (r - 1) * math.factorial(r)


def enumerate_group(rs: RootSystem, cap: int | None = None) -> tuple[WeylElement, ...]:
    """Every group element, in breadth-first (length, then word) order.

    The cap guards against accidental huge enumerations; it defaults to
    50000 and can be overridden by the WEYLALT_MAX_GROUP environment
    variable or the `cap` argument.

    >>> rs = build_root_system(RootSystemSpec("A", 2))
    >>> len(enumerate_group(rs))
    6
    """
    if cap is None:
        cap = int(os.environ.get(_CAP_ENV, DEFAULT_GROUP_CAP))
    order = group_order(rs.spec)
    if order > cap:
        raise GroupSizeError(
            f"Weyl group of {rs.spec.family}_{rs.spec.rank} has {order} elements, "
            f"above the cap of {cap}; raise {_CAP_ENV} or pass a larger cap"
        )
    smats = _simple_matrices(rs)
    start = identity(rs)
    seen = {start.images}
    out = [start]
    frontier = [start]
    while frontier:
        following = []
        for sigma in frontier:
            for i in range(rs.rank):
                if _column_nonneg(sigma.images[i]):
                    grown = _mat_mul(sigma.images, smats[i])
                    if grown not in seen:
                        seen.add(grown)
                        element = WeylElement(
                            images=grown,
                            word=sigma.word + (i + 1,),
                            length=sigma.length + 1,
                        )
                        out.append(element)
                        following.append(element)
        frontier = following
    return tuple(out)


def all_reduced_words(rs: RootSystem, sigma: WeylElement) -> tuple[tuple[int, ...], ...]:
    """Every reduced word for sigma, in lexicographic order.

    Exponential in general; intended for small sanity sweeps.
    """
    smats = _simple_matrices(rs)

    def expand(m_inv: Matrix, remaining: int):
        if remaining == 0:
            yield ()
            return
        for i in range(rs.rank):
            if not _column_nonneg(m_inv[i]):
                for tail in expand(_mat_mul(m_inv, smats[i]), remaining - 1):
                    yield (i + 1,) + tail

    m_inv = _word_matrix(rs, reversed(sigma.word))
    return tuple(expand(m_inv, sigma.length))


def parse_word(text: str) -> tuple[int, ...]:
    """Parse 's1 s2 s1', '1,2,1', or 'e' into a generator-index tuple.

    >>> parse_word("s1 s3")
    (1, 3)
    >>> parse_word("2,1,2")
    (2, 1, 2)
    >>> parse_word("e")
    ()
    """
    text = text.strip()
    if text in ("", "e"):
        return ()
    tokens = (
        [t.strip() for t in text.split(",")] if "," in text else text.split()
    )
    word = []
    for token in tokens:
        body = token[1:] if token.startswith("s") else token
        if not body.isdigit():
            raise ValueError(f"cannot read generator {token!r} in word {text!r}")
        word.append(int(body))
    return tuple(word)


def word_text(word) -> str:
    """Format a generator-index tuple the way `parse_word` reads it.

    >>> word_text((1, 3))
    's1 s3'
    >>> word_text(())
    'e'
    """
    if not word:
        return "e"
    return " ".join(f"s{i}" for i in word)
