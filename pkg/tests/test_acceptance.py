"""Acceptance gate: one test per numbered criterion, with stated budgets.

Each test prints a single PASS line once its assertions hold, so a verbose
run reads as a checklist.  Budgets are asserted, not just observed.
"""

import time
import warnings

from weylalt.altset import (
    compute,
    compute_naive,
    multiplicity,
    q_multiplicity,
    sample_weight_pairs,
    verify_order_ideal,
)
from weylalt.bas import compute_bas, independent_subsets, verify_bijection
from weylalt.enumeration import (
    alternation_count,
    count_neg_height2,
    count_neg_simple,
    fibonacci,
    h_value,
    p_value,
    verify_generating_functions,
)
from weylalt.kostant import QPolynomial
from weylalt.rootsys import (
    RootSystemSpec,
    build_root_system,
    neg_root,
    partition_to_weight,
    zero_weight,
)
from weylalt.typea import (
    verify_catalogs,
    verify_forbidden,
    verify_trichotomy,
    verify_x_bijection,
    x_sequences,
)
from weylalt.weyl import from_word, word_text


def _rs(family, rank):
    return build_root_system(RootSystemSpec(family, rank))


def _criterion_pairs():
    """The shared sweep: rank-4 negated positive roots plus sampled pairs."""
    rs = _rs("A", 4)
    jobs = [
        (rs, rs.highest_root, tuple(-c for c in beta))
        for beta in rs.positive_roots
    ]
    for family, rank in (("A", 4), ("B", 3), ("C", 3), ("D", 4)):
        system = _rs(family, rank)
        for lam, mu in sample_weight_pairs(system, 20, seed=0):
            jobs.append((system, lam, mu))
    return jobs


def test_criterion_01_rank_four_adjoint_example():
    start = time.perf_counter()
    rs = _rs("A", 4)
    mu = tuple(-c for c in rs.highest_root)
    aset = compute(rs, rs.highest_root, mu)
    assert {s.word for s in aset.elements} == {
        (), (1,), (2,), (3,), (4,),
        (1, 3), (1, 4), (2, 3), (3, 2), (2, 4),
        (2, 3, 2),
    }
    bas = compute_bas(rs, rs.highest_root, mu, aset=aset)
    assert {m.word for m in bas.members} == {
        (1,), (2,), (3,), (4,), (2, 3), (3, 2), (2, 3, 2),
    }
    assert len(independent_subsets(bas)) == 11
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    print(f"PASS criterion 01: rank-4 adjoint set, basics, subsets ({elapsed:.3f}s)")


def test_criterion_02_zero_weight_counts_are_fibonacci():
    start = time.perf_counter()
    for r in range(1, 11):
        rs = _rs("A", r)
        assert len(compute(rs, rs.highest_root, zero_weight(r))) == fibonacci(r)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    print(f"PASS criterion 02: zero-weight sizes F_1..F_10 ({elapsed:.3f}s)")


def test_criterion_03_closed_forms_match_counts():
    for r in range(2, 10):
        for i in range(1, r + 1):
            assert count_neg_simple(r, i) == alternation_count(r, i, i)
        for i in range(1, r):
            assert count_neg_height2(r, i) == alternation_count(r, i, i + 1)
    print("PASS criterion 03: closed forms equal counts for ranks 2..9")


_TABLE_P = {1: (1, 2, 3, 8), 2: (1, 2, 6, 12), 3: (2, 4, 9, 20)}
_TABLE_H = {1: (1, 3, 5, 11), 2: (2, 3, 8, 18), 3: (3, 6, 13, 29)}


def test_criterion_04_leading_table_reproduced():
    for i in (1, 2, 3):
        for offset in range(4):
            r = i + offset
            assert p_value(r, i) == _TABLE_P[i][offset]
            assert h_value(r, i) == _TABLE_H[i][offset]
    print("PASS criterion 04: all 24 leading p and h values reproduced")


def test_criterion_05_catalogs_match_computation():
    start = time.perf_counter()
    report = verify_catalogs(9)
    assert report.ok, report.failures
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0
    print(
        f"PASS criterion 05: catalogs equal computed basics through rank 9 "
        f"({report.checked} checks, {elapsed:.1f}s)"
    )


def test_criterion_06_generating_functions_match_tables():
    report = verify_generating_functions(9)
    assert report.ok, report.failures
    print(
        f"PASS criterion 06: univariate, bivariate, and trivariate series "
        f"match counts through rank 9 ({report.checked} checks)"
    )


def test_criterion_07_order_ideal_closures():
    for system, lam, mu in _criterion_pairs():
        report = verify_order_ideal(system, lam, mu)
        assert report.ok, report.failures
    print("PASS criterion 07: both weak-order closures on all sweep pairs")


def test_criterion_08_factorization_bijection():
    for system, lam, mu in _criterion_pairs():
        report = verify_bijection(system, lam, mu)
        assert report.ok, report.failures
    print("PASS criterion 08: subset reconstruction bijective on all sweep pairs")


def test_criterion_09_oracle_equivalence():
    for system, lam, mu in _criterion_pairs():
        assert compute(system, lam, mu).elements == compute_naive(
            system, lam, mu
        ).elements
    print("PASS criterion 09: ideal search equals full-group filter on all sweep pairs")


def test_criterion_10_trichotomy_and_forbidden_words():
    report = verify_trichotomy(4, 8)
    assert report.ok, report.failures
    forbidden = verify_forbidden(8)
    assert forbidden.ok, forbidden.failures
    print(
        f"PASS criterion 10: product trichotomy ranks 4..8 "
        f"({report.checked} checks) and vanishing forbidden words "
        f"({forbidden.checked} checks)"
    )


def test_criterion_11_graded_closed_form_instances():
    start = time.perf_counter()
    for r in range(1, 8):
        rs = _rs("A", r)
        for i in range(1, r + 1):
            for j in range(i, r + 1):
                expected = (
                    QPolynomial.monomial(r + j - i + 1)
                    + QPolynomial.monomial(r + j - i)
                    - QPolynomial.monomial(j - i + 1)
                )
                assert q_multiplicity(rs, rs.highest_root, neg_root(rs, i, j)) == expected
    elapsed = time.perf_counter() - start
    assert elapsed < 300.0
    print(
        f"PASS criterion 11: graded closed form verified as instances, "
        f"ranks 1..7, not claimed as proof ({elapsed:.1f}s)"
    )


def test_criterion_12_zero_weight_and_root_multiplicities():
    for r in range(1, 7):
        rs = _rs("A", r)
        assert q_multiplicity(rs, rs.highest_root, zero_weight(r)) == QPolynomial(
            (0,) + (1,) * r
        )
        for root in rs.positive_roots:
            for sign in (1, -1):
                target = tuple(sign * c for c in root)
                assert multiplicity(rs, rs.highest_root, target) == 1
    print("PASS criterion 12: zero-weight q-sum and multiplicity one at roots, ranks 1..6")


def test_criterion_13_sequence_encoding():
    for r in range(1, 11):
        report = verify_x_bijection(r)
        assert report.ok, report.failures
    assert [x.entries for x in x_sequences(3)] == [
        (0, 0, 0), (0, 0, 1), (0, 2, 0), (1, 0, 0), (1, 0, 1),
    ]
    print("PASS criterion 13: sequence encoding bijections, ranks 1..10")


def test_criterion_14_recursive_decomposition():
    sizes = {}
    for r in (5, 6, 7):
        rs = _rs("A", r)
        aset = compute(rs, rs.highest_root, neg_root(rs, 2, 4))
        naive = compute_naive(rs, rs.highest_root, neg_root(rs, 2, 4))
        assert aset.elements == naive.elements
        sizes[r] = len(aset)
    assert sizes[5] == 12
    assert sizes[6] == 20
    assert sizes[7] == 32
    assert sizes[7] == sizes[6] + sizes[5]
    print(
        "PASS criterion 14: decomposition 32 = 20 + 12 with full-filter "
        "cross-check (published diagram omits the two elements containing "
        "s4 s5, hence its 18 and 30)"
    )


_RANK_EIGHT_BASICS = {
    (1,), (2,), (3,), (4,), (5,), (6,),
    (3, 4), (4, 3), (4, 5), (5, 4), (5, 6),
    (3, 4, 3), (3, 4, 5), (3, 5, 4), (4, 5, 4), (4, 5, 6),
    (3, 4, 5, 4),
}

_RANK_C5_PUBLISHED = (
    (2,), (3,), (4,), (5,),
    (2, 3), (3, 2), (3, 4), (4, 3), (4, 5),
    (2, 3, 2), (2, 4, 3), (3, 4, 2), (3, 4, 3), (4, 3, 2),
    (2, 4, 3, 2), (3, 4, 3, 2),
)


def test_criterion_15_published_example_tables():
    rs = _rs("A", 8)
    lam = partition_to_weight((4, 3, 1), 8)
    mu = partition_to_weight((2, 1, 1, 1, 1, 1, 1), 8)
    bas = compute_bas(rs, lam, mu)
    assert {m.word for m in bas.members} == _RANK_EIGHT_BASICS

    # The symplectic example's mu is stated ambiguously at its source (one
    # coordinate appears twice); this runs the most plausible reading and
    # reports agreement without asserting it.
    rsc = _rs("C", 5)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        computed = compute_bas(rsc, (3, 5, 7, 9, 5), (2, 2, 3, 3, 3))
    published = {from_word(rsc, w).images for w in _RANK_C5_PUBLISHED}
    got = {m.images for m in computed.members}
    status = "matches" if got == published else "differs from"
    print(
        f"PASS criterion 15: rank-8 table exact; gated symplectic reading "
        f"{status} the published table as elements "
        f"({len(computed)} computed, {len(published)} published)"
    )
