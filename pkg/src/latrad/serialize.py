"""JSON interchange for lattices, vector sets and verdicts.

Integers inside matrices and vectors are serialized as decimal strings so
that consumers with 64-bit integer types cannot silently overflow; rationals
are "p/q" strings.  Every printer has a matching parser and round-trips
exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Sequence

from .complete_intersection import CiVerdict, FaceCiReport
from .cone import FaceSupport
from .lattice import Lattice, LatticeVector, from_generators
from .radical_cert import CoverVerdict, FaceReport, MinCoverResult, RadicalVerdict


def _int_out(x: int) -> str:
    return str(x)


def _vec_out(v) -> list[str]:
    entries = v.entries if isinstance(v, LatticeVector) else v
    return [_int_out(x) for x in entries]


def _vec_in(data: Sequence) -> tuple[int, ...]:
    return tuple(int(x) for x in data)


def _frac_out(x: Fraction) -> str:
    return str(x)


def _frac_in(s: str) -> Fraction:
    return Fraction(s)


def lattice_to_obj(L: Lattice) -> dict:
    return {"ambient": L.ambient, "generators": [_vec_out(row) for row in L.basis]}


def lattice_from_obj(obj: dict) -> Lattice:
    ambient = int(obj["ambient"])
    return from_generators(ambient, [_vec_in(row) for row in obj["generators"]])


def vectors_to_obj(vectors: Sequence[LatticeVector], names: Optional[Sequence[str]] = None) -> dict:
    out = {"vectors": [_vec_out(v) for v in vectors]}
    if names is not None:
        out["names"] = list(names)
    return out


def vectors_from_obj(obj: dict) -> tuple[list[LatticeVector], Optional[list[str]]]:
    vectors = [LatticeVector(_vec_in(row)) for row in obj["vectors"]]
    names = list(obj["names"]) if "names" in obj and obj["names"] is not None else None
    return vectors, names


def faces_to_obj(faces: Sequence[FaceSupport]) -> dict:
    return {
        "faces": [
            {"indices": sorted(f.indices), "witness": [_frac_out(x) for x in f.witness]}
            for f in faces
        ]
    }


def cover_verdict_to_obj(v: CoverVerdict) -> dict:
    obj: dict = {"status": v.status}
    obj["witness"] = sorted(v.witness) if v.witness is not None else None
    if v.per_subset_map is not None:
        obj["map"] = {
            ",".join(str(i) for i in sorted(E)): idx for E, idx in sorted(
                v.per_subset_map.items(), key=lambda kv: sorted(kv[0])
            )
        }
    else:
        obj["map"] = None
    return obj


def cover_verdict_from_obj(obj: dict) -> CoverVerdict:
    witness = frozenset(obj["witness"]) if obj.get("witness") is not None else None
    mapping = None
    if obj.get("map") is not None:
        mapping = {
            frozenset(int(t) for t in key.split(",") if t): idx
            for key, idx in obj["map"].items()
        }
    return CoverVerdict(obj["status"] == "pass", witness=witness, per_subset_map=mapping)


def radical_verdict_to_obj(v: RadicalVerdict) -> dict:
    return {
        "status": v.status,
        "characteristic": v.characteristic,
        "cover": cover_verdict_to_obj(v.cover),
        "face_reports": [
            {
                "face": sorted(r.support),
                "required": lattice_to_obj(r.required),
                "generated": lattice_to_obj(r.generated),
                "equal": r.equal,
            }
            for r in v.face_reports
        ],
    }


def radical_verdict_from_obj(obj: dict) -> RadicalVerdict:
    reports = tuple(
        FaceReport(
            frozenset(r["face"]),
            lattice_from_obj(r["required"]),
            lattice_from_obj(r["generated"]),
            bool(r["equal"]),
        )
        for r in obj["face_reports"]
    )
    return RadicalVerdict(
        obj["status"] == "pass",
        int(obj["characteristic"]),
        cover_verdict_from_obj(obj["cover"]),
        reports,
    )


def ci_verdict_to_obj(v: CiVerdict) -> dict:
    return {
        "status": v.status,
        "bound": v.bound,
        "basis": [_vec_out(b) for b in v.basis] if v.basis is not None else None,
        "face": sorted(v.face) if v.face is not None else None,
        "face_reports": [
            {
                "face": sorted(r.support),
                "rank": r.rank,
                "certified": r.certified,
                "basis": [_vec_out(b) for b in r.basis] if r.basis is not None else None,
            }
            for r in v.face_reports
        ],
    }


def ci_verdict_from_obj(obj: dict) -> CiVerdict:
    reports = tuple(
        FaceCiReport(
            frozenset(r["face"]),
            int(r["rank"]),
            bool(r["certified"]),
            tuple(LatticeVector(_vec_in(b)) for b in r["basis"]) if r.get("basis") is not None else None,
        )
        for r in obj["face_reports"]
    )
    return CiVerdict(
        obj["status"],
        basis=tuple(LatticeVector(_vec_in(b)) for b in obj["basis"]) if obj.get("basis") is not None else None,
        face=frozenset(obj["face"]) if obj.get("face") is not None else None,
        bound=obj.get("bound"),
        face_reports=reports,
    )


def min_cover_to_obj(r: MinCoverResult) -> dict:
    if r.exact is not None:
        return {"exact": r.exact, "witness_indices": list(r.witness)}
    return {"at_least": r.at_least}


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def loads(text: str) -> dict:
    return json.loads(text)
