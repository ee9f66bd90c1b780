#!/usr/bin/env python3
"""Certificates for the degree-3 monomial instance, end to end.

Prints the face lattice of the cone, checks the published generating sets in
characteristics 0, 3 and 5, builds the simplex-cone cover, and searches for
the smallest cover inside the named pool.

Run from the repository root:

    PYTHONPATH=src python3 scripts/run_veronese.py
"""

from latrad.configuration import configuration_of
from latrad.cone import enumerate_face_supports
from latrad.instances import instance_veronese33
from latrad.radical_cert import (
    check_radical_generation,
    construct_simplex_cover,
    is_cover,
    min_cover_size,
)


def main() -> None:
    inst = instance_veronese33()
    L = inst.lattice
    A = configuration_of(L)
    print(f"ambient m = {L.ambient}, rank = {L.rank}, cone dimension n = {A.n}")

    print("\nface supports (with certifying functionals):")
    for f in enumerate_face_supports(A):
        print(f"  {sorted(f.indices) or '{}'}  witness {[str(x) for x in f.witness]}")

    eleven = [inst.named[f"u{i}"] for i in range(1, 12)]
    print("\nradical generation, characteristic 0, all eleven vectors:",
          check_radical_generation(L, eleven, 0).status)

    seven = [inst.named[k] for k in ("u1", "u3", "u4", "u6", "u7", "u9", "v")]
    for p in (0, 3, 5):
        verdict = check_radical_generation(L, seven, p)
        bad = [sorted(r.support) for r in verdict.face_reports if not r.equal]
        extra = f" (lattice mismatch at faces {bad})" if bad else ""
        print(f"seven vectors, characteristic {p}: {verdict.status}{extra}")

    six = [inst.named[k] for k in ("u1", "u3", "u4", "u6", "u7", "u9")]
    cover = is_cover(A, six)
    print(f"six vectors cover check: {cover.status}, witness {sorted(cover.witness)}")

    built = construct_simplex_cover(L, A)
    print(f"\nsimplex-cone cover ({len(built)} vectors):")
    for v in built:
        print(f"  {v.entries}")

    result = min_cover_size(A, eleven, limit=7)
    print(f"\nsmallest cover within the eleven named vectors: {result.exact}")


if __name__ == "__main__":
    main()
