"""Grade weight multiplicities by q and test a closed form on instances.

The q-analog of the partition count grades each expression by its number
of parts, and the alternating sum over the alternation set turns that
into a graded weight multiplicity.  A conjectured closed form for the
adjoint weights is checked here instance by instance; agreement on small
ranks is evidence, not a proof.
"""

from weylalt import (
    QPolynomial,
    RootSystemSpec,
    build_root_system,
    kostant_partition,
    kostant_partition_q,
    multiplicity,
    neg_root,
    q_multiplicity,
    zero_weight,
)


def main() -> None:
    rs = build_root_system(RootSystemSpec("A", 3))
    print("partition counts and their q-grading in rank 3:")
    for xi in ((1, 1, 1), (1, 2, 1), (2, 2, 2)):
        plain = kostant_partition(rs, xi)
        graded = kostant_partition_q(rs, xi)
        print(f"  target {xi}: count {plain}, graded {graded}")

    print("adjoint multiplicities: rank at zero, one at every root:")
    for r in (2, 3, 4, 5):
        system = build_root_system(RootSystemSpec("A", r))
        at_zero = multiplicity(system, system.highest_root, zero_weight(r))
        at_simple = multiplicity(system, system.highest_root, system.positive_roots[0])
        print(f"  rank {r}: m(zero) = {at_zero}, m(alpha_1) = {at_simple}")

    print("graded closed form q^(r+j-i+1) + q^(r+j-i) - q^(j-i+1), instances:")
    for r in (3, 4, 5):
        system = build_root_system(RootSystemSpec("A", r))
        for i, j in ((1, 1), (1, r), (2, r - 1)):
            expected = (
                QPolynomial.monomial(r + j - i + 1)
                + QPolynomial.monomial(r + j - i)
                - QPolynomial.monomial(j - i + 1)
            )
            actual = q_multiplicity(system, system.highest_root, neg_root(system, i, j))
            verdict = "ok" if actual == expected else "MISMATCH"
            print(f"  r={r} i={i} j={j}: {actual}  [{verdict}]")
    print("checked on instances only; no rank is proof for the next one")


if __name__ == "__main__":
    main()
