"""Alternation sets: pruned search against the exhaustive filter."""

import pytest

from weylalt.altset import (
    compute,
    compute_naive,
    contains,
    from_json,
    multiplicity,
    q_multiplicity,
    sample_weight_pairs,
    to_dot,
    to_json,
    verify_conjecture,
    verify_order_ideal,
    verify_subword_closure,
)
from weylalt.kostant import QPolynomial
from weylalt.rootsys import (
    RootSystemSpec,
    build_root_system,
    neg_root,
    zero_weight,
)
from weylalt.weyl import from_word, word_text


def _rs(family, rank):
    return build_root_system(RootSystemSpec(family, rank))


def _words(aset):
    return {s.word for s in aset.elements}


def test_rank_four_highest_root_set():
    rs = _rs("A", 4)
    aset = compute(rs, rs.highest_root, tuple(-c for c in rs.highest_root))
    expected = {
        (),
        (1,),
        (2,),
        (3,),
        (4,),
        (1, 3),
        (1, 4),
        (2, 3),
        (2, 4),
        (3, 2),
        (2, 3, 2),
    }
    assert _words(aset) == expected
    assert len(aset) == 11
    # Breadth-first order: by length, then lexicographically by word.
    listed = [s.word for s in aset.elements]
    assert listed == sorted(listed, key=lambda w: (len(w), w))


def test_rank_three_zero_weight_set():
    rs = _rs("A", 3)
    aset = compute(rs, rs.highest_root, zero_weight(3))
    assert _words(aset) == {(), (2,)}


def test_contains_matches_membership():
    rs = _rs("A", 4)
    mu = tuple(-c for c in rs.highest_root)
    aset = compute(rs, rs.highest_root, mu)
    assert contains(rs, rs.highest_root, mu, from_word(rs, (3, 2)))
    assert not contains(rs, rs.highest_root, mu, from_word(rs, (1, 2)))
    for sigma in aset:
        assert contains(rs, rs.highest_root, mu, sigma)


@pytest.mark.parametrize("family,rank", [("A", 4), ("B", 3), ("C", 3), ("D", 4)])
def test_pruned_search_equals_full_filter(family, rank):
    rs = _rs(family, rank)
    for lam, mu in sample_weight_pairs(rs, 6, seed=11):
        fast = compute(rs, lam, mu)
        slow = compute_naive(rs, lam, mu)
        assert fast.elements == slow.elements
        assert sorted(fast.edges, key=lambda e: (e[0].word, e[1].word)) == sorted(
            slow.edges, key=lambda e: (e[0].word, e[1].word)
        )


def test_cover_edges_recorded_once_each():
    rs = _rs("A", 4)
    aset = compute(rs, rs.highest_root, tuple(-c for c in rs.highest_root))
    assert len(set(aset.edges)) == len(aset.edges)
    for a, b in aset.edges:
        assert b.length == a.length + 1


def test_non_dominant_lambda_falls_back_with_warning():
    rs = _rs("A", 3)
    lam = (-1, 0, 0)
    with pytest.warns(UserWarning, match="not dominant integral"):
        aset = compute(rs, lam, (-2, -1, -1))
    naive = compute_naive(rs, lam, (-2, -1, -1))
    assert aset.elements == naive.elements


def test_order_ideal_and_subword_closure_reports():
    rs = _rs("A", 4)
    mu = tuple(-c for c in rs.highest_root)
    ideal = verify_order_ideal(rs, rs.highest_root, mu)
    assert ideal.ok and ideal.checked > 0
    closure = verify_subword_closure(rs, rs.highest_root, mu)
    assert closure.ok and closure.checked > 0
    # Empty sets pass vacuously.
    empty = verify_order_ideal(rs, zero_weight(4), (10, 10, 10, 10))
    assert empty.ok


def test_multiplicity_values():
    for r in range(1, 6):
        rs = _rs("A", r)
        assert multiplicity(rs, rs.highest_root, zero_weight(r)) == r
    rs = _rs("A", 3)
    assert str(q_multiplicity(rs, rs.highest_root, (-1, 0, 0))) == "q^4 + q^3 - q"
    assert q_multiplicity(rs, rs.highest_root, zero_weight(3)) == QPolynomial(
        (0, 1, 1, 1)
    )


def test_conjecture_report_small_rank():
    report = verify_conjecture(max_r=4, identity_max_r=3)
    assert report.ok
    assert report.checked > 0
    assert any("no claim of proof" in n for n in report.notes)


def test_json_round_trip_is_byte_identical():
    rs = _rs("A", 4)
    aset = compute(rs, rs.highest_root, tuple(-c for c in rs.highest_root))
    text = to_json(rs, aset)
    again = from_json(rs, text)
    assert to_json(rs, again) == text
    assert again.elements == aset.elements
    assert again.edges == aset.edges
    with pytest.raises(ValueError, match="serialized set is for"):
        from_json(_rs("A", 3), text)


def test_dot_output_shape():
    rs = _rs("A", 3)
    aset = compute(rs, rs.highest_root, zero_weight(3))
    dot = to_dot(aset)
    assert dot.startswith("digraph alternation_set {")
    assert '"e";' in dot
    assert '"e" -> "s2";' in dot
    assert dot.endswith("}\n")


def test_sample_pairs_are_deterministic_and_dominant():
    rs = _rs("B", 3)
    first = sample_weight_pairs(rs, 5, seed=3)
    second = sample_weight_pairs(rs, 5, seed=3)
    assert first == second
    assert first != sample_weight_pairs(rs, 5, seed=4)
    from weylalt.rootsys import is_dominant, is_integral

    for lam, mu in first:
        assert is_dominant(rs, lam) and is_integral(rs, lam)
        aset = compute(rs, lam, mu)
        assert len(aset) >= 1


def test_neg_root_weights_match_word_text_labels():
    rs = _rs("A", 4)
    assert neg_root(rs, 2, 4) == (0, -1, -1, -1)
    sigma = from_word(rs, (2, 3, 2))
    assert word_text(sigma.word) == "s2 s3 s2"
