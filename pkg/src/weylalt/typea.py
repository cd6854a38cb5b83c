"""Closed-form catalogs and bijections special to type A highest-root pairs.

For lambda the highest root and mu a negated positive root, the basic
allowable subwords fall into five word shapes whose index ranges depend
only on where mu starts and ends.  This module spells those catalogs out,
lists the word families that can never occur inside allowable elements,
and realizes the encoding of A_r(hr, -hr) by sequences over {0, 1, 2}.

Everything here is cross-checked against the general machinery: catalogs
against `bas.compute_bas`, forbidden words against a vanishing partition
count, sequences against the computed alternation set.

>>> [entry.word for entry in catalog_bas(4, 1, 4)]
[(1,), (2,), (3,), (4,), (3, 2), (2, 3), (2, 3, 2)]
>>> [x.entries for x in x_sequences(3)]
[(0, 0, 0), (0, 0, 1), (0, 2, 0), (1, 0, 0), (1, 0, 1)]
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .altset import compute
from .bas import classify_product, compute_bas, independent
from .enumeration import h_value, highest_root_alternation_set
from .kostant import kostant_partition
from .reporting import Report
from .rootsys import RootSystemSpec, build_root_system, wadd, wsub
from .weyl import WeylElement, act, from_word, identity, word_text

__all__ = [
    "CatalogEntry",
    "XSequence",
    "catalog_bas",
    "verify_catalog",
    "verify_catalogs",
    "forbidden_words",
    "verify_forbidden",
    "verify_trichotomy",
    "x_sequences",
    "psi",
    "verify_x_bijection",
]

_SHAPE_PATTERNS = {
    "a": lambda k: (k,),
    "b": lambda k: (k + 1, k),
    "c": lambda k: (k, k + 1),
    "d": lambda k: (k, k + 1, k),
    "e": lambda k: (k + 2, k, k + 1),
}


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog member: a shape label, its index, and the spelled word."""

    shape: str
    k: int
    word: tuple

    def __post_init__(self):
        pattern = _SHAPE_PATTERNS.get(self.shape)
        if pattern is None:
            raise ValueError(f"unknown shape {self.shape!r}")
        if self.word != pattern(self.k):
            raise ValueError(
                f"word {self.word} does not match shape {self.shape} at k={self.k}"
            )


def catalog_bas(r: int, i: int, j: int) -> list:
    """Catalog of basic allowable subwords for A_r(hr, -alpha_{i,j}).

    Index ranges dispatch on whether the negated root touches the ends of
    the diagram.  At r = 1 direct computation shows s_1 is not allowable
    (the shifted weight picks up a negative coordinate), so the catalog is
    empty there even though the i = 1 pattern would nominally emit s_1.

    >>> [entry.word for entry in catalog_bas(5, 2, 4)]
    [(2,), (3,), (4,), (3, 2), (4, 3), (2, 3), (3, 4), (2, 3, 2), (3, 4, 3), (4, 2, 3)]
    >>> catalog_bas(1, 1, 1)
    []
    """
    if not 1 <= i <= j <= r:
        raise ValueError(f"need 1 <= i <= j <= r, got i={i}, j={j}, r={r}")
    if r == 1:
        return []
    if i == 1 and j == r:
        ranges = {
            "a": range(1, r + 1),
            "b": range(2, r - 1),
            "c": range(2, r - 1),
            "d": range(2, r - 1),
            "e": range(2, r - 2),
        }
    elif i == 1:
        ranges = {
            "a": range(1, r),
            "b": range(2, j),
            "c": range(2, min(j, r - 2) + 1),
            "d": range(2, j),
            "e": range(2, j - 1),
        }
    elif j == r:
        ranges = {
            "a": range(2, r + 1),
            "b": range(max(i - 1, 2), r - 1),
            "c": range(i, r - 1),
            "d": range(i, r - 1),
            "e": range(i, r - 2),
        }
    else:
        ranges = {
            "a": range(2, r),
            "b": range(max(i - 1, 2), j),
            "c": range(i, min(j, r - 2) + 1),
            "d": range(i, j),
            "e": range(i, j - 1),
        }
    return [
        CatalogEntry(shape=shape, k=k, word=_SHAPE_PATTERNS[shape](k))
        for shape in "abcde"
        for k in ranges[shape]
    ]


def _compare_catalog(report: Report, r: int, i: int, j: int) -> None:
    rs = build_root_system(RootSystemSpec("A", r))
    aset = highest_root_alternation_set(r, i, j)
    computed = compute_bas(rs, aset.lam, aset.mu, aset=aset)
    computed_images = {sigma.images: sigma for sigma in computed.members}
    catalog_images = {}
    for entry in catalog_bas(r, i, j):
        sigma = from_word(rs, entry.word)
        catalog_images[sigma.images] = sigma
    report.check(
        len(catalog_images) == sum(1 for _ in catalog_bas(r, i, j)),
        f"duplicate catalog entries at r={r}, i={i}, j={j}",
    )

    def detail():
        missing = sorted(
            word_text(catalog_images[m].word)
            for m in catalog_images.keys() - computed_images.keys()
        )
        extra = sorted(
            word_text(computed_images[m].word)
            for m in computed_images.keys() - catalog_images.keys()
        )
        return (
            f"catalog mismatch at r={r}, i={i}, j={j}: "
            f"catalog-only {missing}, computed-only {extra}"
        )

    report.check(catalog_images.keys() == computed_images.keys(), detail)


def verify_catalog(r: int, i: int, j: int) -> Report:
    """Compare one catalog with the computed basic allowable subwords."""
    report = Report(title=f"catalog at r={r}, i={i}, j={j}")
    _compare_catalog(report, r, i, j)
    return report


def verify_catalogs(max_r: int = 9) -> Report:
    """Compare catalogs with computed sets for every negated positive root."""
    report = Report(title=f"catalogs up to rank {max_r}")
    for r in range(1, max_r + 1):
        for i in range(1, r + 1):
            for j in range(i, r + 1):
                _compare_catalog(report, r, i, j)
    return report


def forbidden_words(r: int) -> list:
    """Words that never occur inside elements of A_r(hr, -hr).

    Four families: the two boundary pairs, three orderings of each interior
    consecutive triple, and all 24 orderings of four consecutive generators.
    Overlaps between families are deduplicated; order is (length, word).

    >>> for w in forbidden_words(3):
    ...     print(w)
    (1, 2)
    (2, 1)
    (2, 3)
    (3, 2)
    (1, 2, 3)
    (2, 1, 3)
    (3, 2, 1)
    """
    if r < 2:
        raise ValueError(f"forbidden families start at rank 2, got {r}")
    words = {(2, 1), (1, 2), (r - 1, r), (r, r - 1)}
    for i in range(2, r):
        words.add((i - 1, i, i + 1))
        words.add((i, i - 1, i + 1))
        words.add((i + 1, i, i - 1))
    for k in range(1, r - 2):
        words.update(itertools.permutations(range(k, k + 4)))
    return sorted(words, key=lambda w: (len(w), w))


def verify_forbidden(max_r: int = 8) -> Report:
    """Check every forbidden word lands outside A_r(hr, -hr).

    The membership test is the vanishing of the partition count at the
    shifted weight sigma(hr + rho) + hr - rho.
    """
    report = Report(title=f"forbidden words up to rank {max_r}")
    for r in range(2, max_r + 1):
        rs = build_root_system(RootSystemSpec("A", r))
        lam_rho = wadd(rs.highest_root, rs.rho)
        for word in forbidden_words(r):
            sigma = from_word(rs, word)
            shifted = wsub(wadd(act(rs, sigma, lam_rho), rs.highest_root), rs.rho)
            report.check(
                kostant_partition(rs, shifted) == 0,
                f"forbidden word {word_text(word)} is allowable at r={r}",
            )
    return report


def verify_trichotomy(min_r: int = 4, max_r: int = 8) -> Report:
    """Classify every dependent ordered product of basic allowable subwords.

    Each product must land in exactly one of the three cases; the classifier
    raises if none applies, which the report records as a failure.
    """
    report = Report(title=f"product trichotomy for ranks {min_r}..{max_r}")
    for r in range(min_r, max_r + 1):
        rs = build_root_system(RootSystemSpec("A", r))
        aset = highest_root_alternation_set(r, 1, r)
        bas = compute_bas(rs, aset.lam, aset.mu, aset=aset)
        pairs = 0
        for sigma in bas.members:
            for tau in bas.members:
                if independent(rs, sigma, tau):
                    continue
                pairs += 1
                try:
                    classify_product(rs, sigma, tau, bas, aset)
                except Exception as exc:
                    report.fail(
                        f"classification failed at r={r} for "
                        f"{word_text(sigma.word)} * {word_text(tau.word)}: {exc}"
                    )
                else:
                    report.check(True, "")
        report.note(f"r={r}: {pairs} dependent pairs")
    return report


def _sequence_valid(entries: tuple) -> bool:
    n = len(entries)
    for pos, value in enumerate(entries):
        if value not in (0, 1, 2):
            return False
        smaller = 0
        if pos > 0 and entries[pos - 1] < value:
            smaller += 1
        if pos + 1 < n and entries[pos + 1] < value:
            smaller += 1
        if smaller != value:
            return False
    return True


@dataclass(frozen=True)
class XSequence:
    """A sequence over {0, 1, 2} where each entry counts its strictly
    smaller neighbors."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("sequences must have positive length")
        if not _sequence_valid(entries):
            raise ValueError(f"{entries} violates the neighbor-count rule")


def x_sequences(r: int) -> list:
    """All valid sequences of length r, by exhaustive filter.

    >>> len(x_sequences(4))
    11
    """
    if not 1 <= r <= 12:
        raise ValueError(f"exhaustive filtering is limited to 1 <= r <= 12, got {r}")
    return [
        XSequence(entries=candidate)
        for candidate in itertools.product((0, 1, 2), repeat=r)
        if _sequence_valid(candidate)
    ]


# Words attached to each maximal nonzero run, by the run's start position.
_BLOCK_WORDS = {
    (1,): lambda s: (s,),
    (2,): lambda s: (s,),
    (1, 1): lambda s: (s, s + 1),
    (1, 2): lambda s: (s + 1, s),
    (2, 1): lambda s: (s, s + 1, s),
    (1, 2, 1): lambda s: (s, s + 2, s + 1),
}


def psi(x: XSequence) -> WeylElement:
    """Decode a sequence into a Weyl group element of matching rank.

    Maximal nonzero runs translate to short words at the run's start
    position; runs never touch, so the words commute and concatenating
    them in scan order yields a reduced word.

    >>> rank3 = {x.entries: x for x in x_sequences(3)}
    >>> psi(rank3[(1, 0, 1)]).word
    (1, 3)
    >>> psi(rank3[(0, 2, 0)]).word
    (2,)
    """
    entries = x.entries
    r = len(entries)
    rs = build_root_system(RootSystemSpec("A", r))
    word = []
    pos = 0
    while pos < r:
        if entries[pos] == 0:
            pos += 1
            continue
        start = pos
        while pos < r and entries[pos] != 0:
            pos += 1
        block = entries[start:pos]
        rule = _BLOCK_WORDS.get(block)
        if rule is None:
            raise ValueError(f"run {block} at position {start + 1} has no decoding")
        if block == (1,):
            # A lone 1 needs a 0 on one side only, which confines it to the
            # boundary; interior lone 1s already fail the neighbor rule.
            assert start == 0 or pos == r, f"interior lone 1 in {entries}"
        word.extend(rule(start + 1))
    if not word:
        return identity(rs)
    return from_word(rs, tuple(word))


def verify_x_bijection(r: int) -> Report:
    """Check the sequence decoding hits A_r(hr, -hr) exactly once each."""
    if not 1 <= r <= 12:
        raise ValueError(f"need 1 <= r <= 12, got {r}")
    report = Report(title=f"sequence bijection at rank {r}")
    seqs = x_sequences(r)
    decoded = {}
    for x in seqs:
        sigma = psi(x)
        previous = decoded.setdefault(sigma.images, x)
        report.check(
            previous is x,
            f"sequences {previous.entries} and {x.entries} decode identically",
        )
    aset = highest_root_alternation_set(r, 1, r)
    member_images = {sigma.images for sigma in aset}
    report.check(
        decoded.keys() == member_images,
        f"decoded image differs from the alternation set at rank {r}",
    )
    report.check(
        len(seqs) == h_value(r, 1),
        f"|X_{r}| = {len(seqs)} differs from h^1_{r} = {h_value(r, 1)}",
    )
    return report
