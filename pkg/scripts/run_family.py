#!/usr/bin/env python3
"""Walk the rank-3 family in Z^4: structure, constructions, CI search.

For each parameter value the script verifies the saturation, runs the
characteristic-zero construction (four vectors) and the characteristic-p
constructions (three vectors), and reports the bounded complete-intersection
search, which never certifies these ideals.

Run from the repository root:

    PYTHONPATH=src python3 scripts/run_family.py [m_max]
"""

import sys

from latrad.complete_intersection import ci_search
from latrad.constructor import construct_char0, construct_charp, prepare_full
from latrad.exact_linalg import IntMatrix, integer_kernel
from latrad.instances import instance_ojeda, ojeda_grading
from latrad.lattice import from_generators, saturation
from latrad.radical_cert import check_radical_generation


def main() -> None:
    m_max = int(sys.argv[1]) if len(sys.argv) > 1 else 12
    for m in range(8, m_max + 1):
        inst = instance_ojeda(m)
        L = inst.lattice
        grading = ojeda_grading(m)
        kernel = from_generators(4, integer_kernel(IntMatrix.from_rows([grading])).entries)
        print(f"m = {m}: rank {L.rank}, saturation is the grading kernel: "
              f"{saturation(L) == kernel}")

        F = prepare_full(L)
        z = construct_char0(F)
        verdict = check_radical_generation(L, z, 0)
        print(f"  characteristic 0: {len(z)} vectors, checker {verdict.status}")
        for v in z:
            print(f"    {v.entries}")
        for p in (2, 3):
            y = construct_charp(F, p)
            verdict = check_radical_generation(L, y, p)
            print(f"  characteristic {p}: {len(y)} vectors, checker {verdict.status}")

        ci = ci_search(L, 2)
        print(f"  complete-intersection search (bound 2): {ci.status}")


if __name__ == "__main__":
    main()
