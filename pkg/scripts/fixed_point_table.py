"""Tabulate fixed points: residues, tau functions and Baker operators."""

import argparse

from cmgrass.baker import diff_op, solution_space
from cmgrass.cm import fixed_point, rho, tau_cm
from cmgrass.partitions import partitions_of


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nmax", type=int, default=3)
    args = parser.parse_args()
    for n in range(1, args.nmax + 1):
        for lam in partitions_of(n):
            P = fixed_point(lam)
            eigs = sorted(rho(P).roots.elements())
            sols = ", ".join(str(g) for _, g in solution_space(P).basis())
            print(f"lambda={lam}")
            print(f"  eig(YX)  = {[str(x) for x in eigs]}")
            print(f"  tau      = {tau_cm(P, n)}")
            print(f"  D        = {diff_op(P)}")
            print(f"  ker D    = span{{{sols}}}")


if __name__ == "__main__":
    main()
