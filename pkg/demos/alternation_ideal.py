"""Walk one alternation set and watch it behave like an order ideal.

The set here is the rank-4 adjoint example: lambda is the highest root
and mu its negative.  The walk prints the breadth-first layers, then
drops single letters from witness words to show that everything below a
member stays inside the set.
"""

from weylalt import (
    RootSystemSpec,
    build_root_system,
    compute,
    contains,
    from_word,
    word_text,
)


def show_layers(aset) -> None:
    by_length: dict = {}
    for sigma in aset.elements:
        by_length.setdefault(sigma.length, []).append(sigma)
    for length in sorted(by_length):
        names = ", ".join(word_text(s.word) for s in by_length[length])
        print(f"  length {length}: {names}")


def show_downward_closure(rs, aset) -> None:
    lam, mu = aset.lam, aset.mu
    for sigma in aset.elements:
        if sigma.length < 2:
            continue
        for drop in range(len(sigma.word)):
            shorter = sigma.word[:drop] + sigma.word[drop + 1 :]
            below = from_word(rs, shorter)
            verdict = "in" if contains(rs, lam, mu, below) else "OUT"
            print(
                f"  {word_text(sigma.word)} minus letter {drop + 1}"
                f" -> {word_text(below.word)}: {verdict}"
            )


def main() -> None:
    rs = build_root_system(RootSystemSpec("A", 4))
    mu = tuple(-c for c in rs.highest_root)
    aset = compute(rs, rs.highest_root, mu)
    print(f"A_4 alternation set at the negated highest root: {len(aset)} elements")
    show_layers(aset)
    print(f"cover edges recorded inside the set: {len(aset.edges)}")
    print("deleting any letter of a member lands back in the set:")
    show_downward_closure(rs, aset)


if __name__ == "__main__":
    main()
