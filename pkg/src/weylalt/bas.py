"""Basic allowable subwords: the irreducible members of an alternation set.

Nonidentity members whose influence is connected in the Dynkin diagram
cannot split as products of independent pieces; every other member factors
uniquely as a product of pairwise independent basic elements.  That makes
the basic allowable subwords a free generating tableau for the whole set:
`independent_subsets` composed with `reconstruct` is a bijection onto it,
and `verify_bijection` certifies that on any computed instance.

>>> rs = build_root_system(RootSystemSpec("A", 4))
>>> bas = compute_bas(rs, rs.highest_root, neg_root(rs, 1, 4))
>>> len(bas.members), len(independent_subsets(bas))
(7, 11)
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .altset import AlternationSet, compute
from .reporting import Report
from .rootsys import (
    RootSystem,
    RootSystemSpec,
    Weight,
    as_weight,
    build_root_system,
    neg_root,
    wsub,
)
from .weyl import (
    WeylElement,
    _mat_mul,
    connected_influence,
    from_word,
    identity,
    independent,
    multiply,
    parse_word,
    word_text,
)

__all__ = [
    "BasSet",
    "EmptyAlternationSetError",
    "TrichotomyError",
    "ProductCase",
    "ProductClassification",
    "compute_bas",
    "independent_subsets",
    "reconstruct",
    "verify_bijection",
    "verify_monotonicity",
    "classify_product",
    "to_json",
    "from_json",
    "to_dot",
]


class EmptyAlternationSetError(ValueError):
    """The alternation set is empty, so no basic subwords exist."""


class TrichotomyError(RuntimeError):
    """A product of dependent basic elements fit none of the three cases."""


@dataclass(frozen=True)
class BasSet:
    """Basic members plus the dependence edges among them.

    An edge joins two members that are not independent; independent subsets
    are exactly the subsets spanning no edge.
    """

    lam: Weight
    mu: Weight
    members: tuple[WeylElement, ...]
    dependence_edges: tuple[tuple[WeylElement, WeylElement], ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def compute_bas(
    rs: RootSystem, lam, mu, aset: AlternationSet | None = None
) -> BasSet:
    """Extract the basic allowable subwords of the alternation set.

    The filter keeps nonidentity members with connected influence; the
    factorization bijection certified by `verify_bijection` is what makes
    this filter the right notion of irreducibility.
    """
    lam = as_weight(lam)
    mu = as_weight(mu)
    if aset is None:
        aset = compute(rs, lam, mu)
    if not aset.elements:
        raise EmptyAlternationSetError(
            "the alternation set is empty; basic subwords are undefined"
        )
    members = tuple(
        s for s in aset.elements if s.length and connected_influence(rs, s)
    )
    edges = []
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            if not independent(rs, members[a], members[b]):
                edges.append((members[a], members[b]))
    return BasSet(
        lam=lam, mu=mu, members=members, dependence_edges=tuple(edges)
    )


def independent_subsets(bas: BasSet) -> tuple[tuple[WeylElement, ...], ...]:
    """All pairwise independent subsets of the members, the empty one included.

    Standard include-or-skip recursion against the dependence edges; the
    output order is deterministic for a given member order.
    """
    members = bas.members
    blocked = {m: set() for m in members}
    for a, b in bas.dependence_edges:
        blocked[a].add(b)
        blocked[b].add(a)
    out = []

    def grow(start: int, chosen: tuple[WeylElement, ...]) -> None:
        out.append(chosen)
        for k in range(start, len(members)):
            candidate = members[k]
            if all(candidate not in blocked[c] for c in chosen):
                grow(k + 1, chosen + (candidate,))

    grow(0, ())
    return tuple(out)


def reconstruct(rs: RootSystem, subset) -> WeylElement:
    """Product of a pairwise independent subset; the empty set gives the identity.

    Independent elements commute, so the product does not depend on the
    ordering; that is checked here rather than assumed.

    >>> rs = build_root_system(RootSystemSpec("A", 4))
    >>> pair = (from_word(rs, (1,)), from_word(rs, (3,)))
    >>> word_text(reconstruct(rs, pair).word)
    's1 s3'
    """
    chosen = tuple(subset)
    if not chosen:
        return identity(rs)
    for a in range(len(chosen)):
        for b in range(a + 1, len(chosen)):
            if not independent(rs, chosen[a], chosen[b]):
                raise ValueError(
                    f"{word_text(chosen[a].word)} and {word_text(chosen[b].word)} "
                    "are not independent"
                )
            left = _mat_mul(chosen[a].images, chosen[b].images)
            right = _mat_mul(chosen[b].images, chosen[a].images)
            if left != right:
                raise RuntimeError(
                    "independent elements failed to commute: "
                    f"{word_text(chosen[a].word)}, {word_text(chosen[b].word)}"
                )
    return multiply(rs, *chosen)


def verify_bijection(rs: RootSystem, lam, mu) -> Report:
    """Certify that reconstruct maps independent subsets bijectively onto the set."""
    lam = as_weight(lam)
    mu = as_weight(mu)
    report = Report(title=f"factorization bijection {rs.spec.family}_{rs.spec.rank}")
    aset = compute(rs, lam, mu)
    if not aset.elements:
        report.note("empty alternation set; no basic subwords to verify")
        return report
    bas = compute_bas(rs, lam, mu, aset=aset)
    subsets = independent_subsets(bas)
    products = [reconstruct(rs, s) for s in subsets]
    report.check(
        len({p.images for p in products}) == len(products),
        "reconstruct is not injective on independent subsets",
    )
    report.check(
        {p.images for p in products} == {s.images for s in aset.elements},
        lambda: (
            f"image has {len({p.images for p in products})} elements, "
            f"alternation set has {len(aset)}"
        ),
    )
    report.check(
        len(subsets) == len(aset),
        lambda: f"{len(subsets)} subsets against {len(aset)} members",
    )
    return report


def verify_monotonicity(rs: RootSystem, lam, mu, nu) -> Report:
    """Check BAS(lambda, mu) = BAS(lambda, nu) when restricted to A(lambda, mu).

    Requires nu below mu (mu - nu a nonnegative integer combination of
    simple roots), which forces A(lambda, mu) inside A(lambda, nu).
    """
    lam = as_weight(lam)
    mu = as_weight(mu)
    nu = as_weight(nu)
    diff = wsub(mu, nu)
    if any(c < 0 or c.denominator != 1 for c in diff):
        raise ValueError(
            "nu must lie below mu: mu - nu needs nonnegative integer coordinates"
        )
    report = Report(title=f"basic-set monotonicity {rs.spec.family}_{rs.spec.rank}")
    aset_mu = compute(rs, lam, mu)
    aset_nu = compute(rs, lam, nu)
    bas_mu = compute_bas(rs, lam, mu, aset=aset_mu)
    bas_nu = compute_bas(rs, lam, nu, aset=aset_nu)
    in_mu = {s.images for s in bas_mu.members}
    for sigma in sorted(
        set(bas_mu.members) | set(bas_nu.members), key=lambda s: (s.length, s.word)
    ):
        expected = sigma in bas_nu.members and sigma in aset_mu
        report.check(
            (sigma.images in in_mu) == expected,
            lambda s=sigma: f"{word_text(s.word)} breaks the restriction identity",
        )
    return report


class ProductCase(Enum):
    IN_S = "in-basic-set"
    SHORTER_INDEPENDENT_PRODUCT = "shorter-independent-product"
    NOT_IN_A = "outside-alternation-set"


@dataclass(frozen=True)
class ProductClassification:
    case: ProductCase
    product: WeylElement
    witness: tuple[WeylElement, ...] | None = None


@lru_cache(maxsize=None)
def _reconstruction_index(rs: RootSystem, bas: BasSet):
    """Map product images to the least-total-length independent subset."""
    subsets = sorted(
        independent_subsets(bas),
        key=lambda s: (sum(e.length for e in s), tuple(e.word for e in s)),
    )
    table = {}
    for subset in subsets:
        element = reconstruct(rs, subset)
        if element.images not in table:
            table[element.images] = (subset, sum(e.length for e in subset))
    return table


def classify_product(
    rs: RootSystem,
    sigma: WeylElement,
    tau: WeylElement,
    bas: BasSet,
    aset: AlternationSet,
) -> ProductClassification:
    """Sort the product of two dependent basic elements into its trichotomy case.

    Either sigma tau is itself basic, or it reconstructs from an independent
    subset of strictly smaller total length (the identity counts, via the
    empty subset), or it falls outside the alternation set.  Anything else
    raises TrichotomyError, which would falsify the trichotomy on this
    instance.
    """
    member_images = {m.images for m in bas.members}
    if sigma.images not in member_images or tau.images not in member_images:
        raise ValueError("classify_product expects two members of the basic set")
    if independent(rs, sigma, tau):
        raise ValueError(
            f"{word_text(sigma.word)} and {word_text(tau.word)} are independent; "
            "their product needs no classification"
        )
    product = multiply(rs, sigma, tau)
    if product.images in member_images:
        return ProductClassification(case=ProductCase.IN_S, product=product)
    entry = _reconstruction_index(rs, bas).get(product.images)
    if entry is not None and entry[1] < sigma.length + tau.length:
        return ProductClassification(
            case=ProductCase.SHORTER_INDEPENDENT_PRODUCT,
            product=product,
            witness=entry[0],
        )
    if product not in aset:
        return ProductClassification(case=ProductCase.NOT_IN_A, product=product)
    raise TrichotomyError(
        f"{word_text(sigma.word)} * {word_text(tau.word)} = "
        f"{word_text(product.word)} fits no trichotomy case"
    )


def to_json(rs: RootSystem, bas: BasSet) -> str:
    payload = {
        "family": rs.spec.family,
        "rank": rs.spec.rank,
        "lambda": [str(c) for c in bas.lam],
        "mu": [str(c) for c in bas.mu],
        "members": [word_text(s.word) for s in bas.members],
        "dependence_edges": [
            [word_text(a.word), word_text(b.word)]
            for a, b in bas.dependence_edges
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def from_json(rs: RootSystem, text: str) -> BasSet:
    data = json.loads(text)
    if data["family"] != rs.spec.family or data["rank"] != rs.spec.rank:
        raise ValueError(
            f"serialized set is for {data['family']}_{data['rank']}, "
            f"not {rs.spec.family}_{rs.spec.rank}"
        )
    members = tuple(from_word(rs, parse_word(w)) for w in data["members"])
    by_name = {word_text(s.word): s for s in members}
    edges = tuple(
        (by_name[a], by_name[b]) for a, b in data["dependence_edges"]
    )
    return BasSet(
        lam=as_weight(data["lambda"]),
        mu=as_weight(data["mu"]),
        members=members,
        dependence_edges=edges,
    )


def to_dot(bas: BasSet) -> str:
    """Dependence graph; an edge marks a pair that is not independent."""
    lines = ["graph basic_subword_dependence {"]
    for sigma in bas.members:
        lines.append(f'  "{word_text(sigma.word)}";')
    for a, b in bas.dependence_edges:
        lines.append(f'  "{word_text(a.word)}" -- "{word_text(b.word)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
