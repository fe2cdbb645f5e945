"""Identify a unipotent class from an adjoint-restriction decomposition.

A rank-1 subgroup of a simple algebraic group restricts the adjoint
module to a direct sum of irreducibles, Weyl modules, duals and tilting
modules.  The Jordan type of a unipotent element of the subgroup on that
restriction pins down its conjugacy class in the ambient group via the
standard tables.  This walks the 78-dimensional example at p = 5.
"""

from unipjordan import bundled_table, eval_expr, identify_from_expr, parse_expr

EXPR = "L(14)+T(10)+V(10)+V(10)^*+T(6)+L(4)+L(4)+L(0)"
P = 5


def main():
    print(f"decomposition: {EXPR}")
    print(f"characteristic: {P}\n")

    e = parse_expr(EXPR)

    print("summand-by-summand Jordan types:")
    for text in EXPR.split("+"):
        part = eval_expr(parse_expr(text), P)
        print(f"  {text:10s} dim {part.dim:3d}   {part.jordan}")

    total = eval_expr(e, P)
    print(f"\nwhole module: dim {total.dim}, Jordan type {total.jordan}")

    table = bundled_table()
    jordan, result = identify_from_expr(table, "E6", P, e)
    print(f"class-table lookup for E6 at p = {P}: {result.label}")
    assert result.label == "A_4"


if __name__ == "__main__":
    main()
