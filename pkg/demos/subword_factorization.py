"""Factor an alternation set through its basic allowable subwords.

Every member of the set is a commuting product of a pairwise independent
subset of the basic elements, and that correspondence is a bijection.
The script lists the basics, prints the dependence graph edges, rebuilds
the whole set from independent subsets, and classifies a few dependent
products into the three possible cases.
"""

from weylalt import (
    RootSystemSpec,
    build_root_system,
    classify_product,
    compute,
    compute_bas,
    independent_subsets,
    reconstruct,
    word_text,
)


def subset_name(subset) -> str:
    if not subset:
        return "{}"
    return "{" + ", ".join(word_text(s.word) for s in subset) + "}"


def main() -> None:
    rs = build_root_system(RootSystemSpec("A", 4))
    mu = tuple(-c for c in rs.highest_root)
    aset = compute(rs, rs.highest_root, mu)
    bas = compute_bas(rs, rs.highest_root, mu, aset=aset)

    print(f"basic allowable subwords: {len(bas)}")
    for member in bas.members:
        print(f"  {word_text(member.word)}")
    print(f"dependence edges: {len(bas.dependence_edges)}")
    for a, b in bas.dependence_edges:
        print(f"  {word_text(a.word)} -- {word_text(b.word)}")

    print("independent subsets rebuild the whole set:")
    for subset in independent_subsets(bas):
        product = reconstruct(rs, subset)
        print(f"  {subset_name(subset):>24} -> {word_text(product.word)}")
    print(f"{len(independent_subsets(bas))} subsets for {len(aset)} members")

    print("products of dependent basics fall into three cases:")
    by_word = {m.word: m for m in bas.members}
    samples = [((1,), (2,)), ((2,), (3,)), ((2, 3), (3, 2))]
    for left, right in samples:
        result = classify_product(rs, by_word[left], by_word[right], bas, aset)
        line = (
            f"  {word_text(left)} * {word_text(right)}"
            f" = {word_text(result.product.word)}: {result.case.value}"
        )
        if result.witness is not None:
            line += f" via {subset_name(result.witness)}"
        print(line)


if __name__ == "__main__":
    main()
