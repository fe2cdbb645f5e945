"""Distinguished unipotent classes arising from quasi-minuscule tilting.

For several simple types the indecomposable tilting module at the
quasi-minuscule weight embeds the group into a classical group one or
two dimensions above the Weyl module, and regular unipotent elements
land in distinguished classes there.  This tours the known examples:
the criteria are 'distinct odd sizes' for SO in odd characteristic and
'even sizes, multiplicity at most two, orthogonally decomposed' for
Sp/SO in characteristic two.
"""

from unipjordan import (
    bminus1_family,
    is_distinguished,
    lift_quotient_to_orthogonal,
    parse_partition,
    qm_structure,
    root_system,
)


def show(group, p, partition, dim, witness=False):
    t = parse_partition(partition, p)
    v = is_distinguished(group, p, t, dim, orthogonal_witness=witness)
    caveat = "  [needs an orthogonal decomposition witness]" \
        if v.requires_orthogonal_witness else ""
    print(f"  {group}_{dim} at p={p}, type {partition}: "
          f"{'distinguished' if v.distinguished else 'not distinguished'}"
          f" ({v.reason}){caveat}")


def main():
    print("F4 inside SO_27 in characteristic 3:")
    q = qm_structure(root_system("F", 4), 3)
    print(f"  tilting module at {q.weight_name}: {q.tilting_series}, "
          f"dim {q.dim_tilting}")
    show("SO", 3, "15 9 3", 27)

    print("\nG2 inside Sp_8 in characteristic 2:")
    q = qm_structure(root_system("G", 2), 2)
    print(f"  tilting module at {q.weight_name}: dim {q.dim_tilting}")
    lifted = lift_quotient_to_orthogonal(parse_partition("6", 2))
    print(f"  lift of the quotient type 6 through the stabilized vector: {lifted}")
    show("Sp", 2, str(lifted), 8)

    print("\nE7 inside Sp_134 in characteristic 2:")
    q = qm_structure(root_system("E", 7), 2)
    print(f"  tilting module at {q.weight_name}: dim {q.dim_tilting}")
    lifted = lift_quotient_to_orthogonal(parse_partition("32 26 22 18 16 10 8", 2))
    print(f"  lifted type: {lifted}")
    show("Sp", 2, str(lifted), 134)

    print("\nD6 inside Sp_68 in characteristic 2 (repeated sizes allowed up to two):")
    q = qm_structure(root_system("D", 6), 2)
    print(f"  tilting module at {q.weight_name}: {q.tilting_series}, "
          f"dim {q.dim_tilting}")
    show("Sp", 2, "16 14 10^2 8 6 2^2", 68)
    show("Sp", 2, "16 14 10^2 8 6 2^2", 68, witness=True)

    print("\nthe infinite stabilizer family (vector stabilizers in even "
          "quadratic spaces):")
    for l in (2, 3, 4, 9, 20):
        quotient, lifted = bminus1_family(l)
        v = is_distinguished("Sp", 2, lifted, 2 * l, orthogonal_witness=True)
        print(f"  l={l:2d}: quotient {quotient}, lift {lifted}, "
              f"Sp_{2 * l}: {'distinguished' if v.distinguished else 'no'}")


if __name__ == "__main__":
    main()
