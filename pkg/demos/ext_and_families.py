"""Ext groups between SL2 irreducibles and module families by Jordan type.

Ext^1 between two irreducibles is nonzero exactly under a local rewrite
condition on the base-p digits of the highest weights.  When an
extension exists and has a single size-p Jordan block, it is a Frobenius
twist of a Weyl module or of its dual; Jordan data alone then decides
semisimplicity in the self-dual case.
"""

from unipjordan import (
    classify_dim4_p2,
    enumerate_indecomposables,
    ext1_neighbors,
    ext1_nonzero,
    nonsplit_ext_classify,
    parse_partition,
    semisimplicity_verdict,
)


def main():
    p = 5
    print(f"weights mu <= 60 with Ext^1(L(lambda), L(mu)) != 0 at p = {p}:")
    for lam in range(0, 9):
        nb = sorted(ext1_neighbors(lam, p, 60))
        print(f"  lambda={lam}: {nb}")
        assert all(ext1_nonzero(lam, mu, p) for mu in nb)

    print("\nclassifying nonsplit extensions:")
    for lam, mu in ((6, 2), (2, 6), (30, 10), (10, 30), (3, 3)):
        v = nonsplit_ext_classify(lam, mu, p)
        extra = f", Jordan {v.jordan}" if v.jordan else ""
        params = f"(c={v.c}, l={v.l})" if v.c is not None else ""
        print(f"  ({lam}, {mu}): {v.kind}{params}{extra}")

    print("\nindecomposable families with Jordan type 5 2 at p = 5:")
    for fam in enumerate_indecomposables(parse_partition("5 2", p), p):
        print(f"  {fam.kind}: {fam.template}   ({fam.constraint})")

    print("\nthe three families with Jordan type 2^2 at p = 2:")
    for fam in classify_dim4_p2():
        print(f"  {fam.kind}: {fam.template}   ({fam.constraint})")

    print("\nsemisimplicity from Jordan data at p = 5:")
    for text, self_dual in (("3 1", False), ("5 2", True), ("5 2", False)):
        v = semisimplicity_verdict(parse_partition(text, p), self_dual, p)
        print(f"  type {text}, self-dual={self_dual}: {v.verdict} ({v.reason})")


if __name__ == "__main__":
    main()
