"""Closed forms versus the finite-field matrix oracle.

The calculus computes Jordan types from closed formulas; the oracle
builds the unipotent element as an explicit matrix over GF(p) and reads
the type off the rank sequence of powers of M - I.  The two routes are
independent, which is the whole point: agreement is evidence, and the
oracle emits a certificate carrying the raw rank sequence.
"""

import json

from unipjordan import (
    eval_expr,
    jordan_type_of_unipotent,
    kron,
    oracle_certificate,
    oracle_eval,
    parse_expr,
    pascal_matrix,
)


def main():
    p = 5

    print("Pascal matrix model of the Weyl module V(10) at p = 5:")
    M = pascal_matrix(10, p)
    print(f"  matrix size {M.rows}x{M.cols}, Jordan type "
          f"{jordan_type_of_unipotent(M)} (closed form says q.J_p + J_(r+1))")

    print("\ntensor product J_3 (x) J_3 as a Kronecker product:")
    K = kron(pascal_matrix(2, p), pascal_matrix(2, p))
    print(f"  oracle: {jordan_type_of_unipotent(K)}")

    for text in ("L(14)", "L(8)", "V(10)*L(1)", "(L(7)+V(3))^*[2]"):
        e = parse_expr(text)
        closed = eval_expr(e, p).jordan
        brute = oracle_eval(e, p)
        flag = "agree" if closed == brute else "MISMATCH"
        print(f"\n{text}: closed form {closed}, oracle {brute} -> {flag}")
        assert closed == brute

    print("\naudit certificate for L(14):")
    print(json.dumps(oracle_certificate(parse_expr("L(14)"), p), indent=2))


if __name__ == "__main__":
    main()
