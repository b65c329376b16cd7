"""Compare the unweighted and dimension-weighted sums of LR coefficients.

For shapes mu^(1), ..., mu^(k) the induced module decomposes as
sum_lam c^lam_mu lam, so its dimension is sum_lam dim(lam) c^lam_mu.  The
unweighted sum counts constituents instead and differs in general.
"""

import argparse

from cmgrass.suites import induced_dimension, induced_dimension_sum, lr_sum, multipartitions


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--nmax", type=int, default=6)
    parser.add_argument("--show", type=int, default=5, help="mismatches to print")
    args = parser.parse_args()
    total = unweighted_bad = weighted_bad = 0
    shown = 0
    for n in range(1, args.nmax + 1):
        for mus in multipartitions(n):
            total += 1
            dim = induced_dimension(mus)
            plain = lr_sum(n, mus)
            weighted = induced_dimension_sum(n, mus)
            weighted_bad += weighted != dim
            if plain != dim:
                unweighted_bad += 1
                if shown < args.show:
                    shown += 1
                    print(f"mu={mus}: sum c = {plain}, sum dim*c = {weighted}, dim Ind = {dim}")
    print(f"{total} multipartitions with n <= {args.nmax}")
    print(f"unweighted sum = dim Ind fails for {unweighted_bad}")
    print(f"weighted sum = dim Ind fails for {weighted_bad}")


if __name__ == "__main__":
    main()
