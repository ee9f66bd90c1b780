"""Command-line interface.

Exit codes: 0 for a passing verdict or successful computation, 1 for a
failing verdict (cover/radical check fails, no certificate found), 2 for
usage errors and rejected inputs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import serialize
from .complete_intersection import CI_CERTIFIED, ci_search
from .cone import enumerate_face_supports
from .configuration import configuration_of
from .constructor import construct_char0, construct_charp, prepare_full
from .instances import instance_ojeda, instance_veronese33, random_positive_lattice
from .lattice import Lattice, contains
from .radical_cert import check_radical_generation, construct_simplex_cover, is_cover, min_cover_size


class UsageError(Exception):
    pass


def _read_lattice(path: str) -> Lattice:
    try:
        return serialize.lattice_from_obj(serialize.loads(Path(path).read_text()))
    except (OSError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot read lattice file {path}: {exc}") from exc


def _read_vectors(path: str):
    try:
        return serialize.vectors_from_obj(serialize.loads(Path(path).read_text()))
    except (OSError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot read vector file {path}: {exc}") from exc


def _emit(obj: dict, out: str | None) -> None:
    text = serialize.dumps(obj)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_char(raw: str) -> int:
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"invalid characteristic {raw!r}") from exc


def _cmd_faces(args) -> int:
    L = _read_lattice(args.lattice)
    A = configuration_of(L)
    _emit(serialize.faces_to_obj(enumerate_face_supports(A)), args.output)
    return 0


def _cmd_check_cover(args) -> int:
    L = _read_lattice(args.lattice)
    vectors, _ = _read_vectors(args.vectors)
    for v in vectors:
        if not contains(L, v):
            raise UsageError(f"vector {list(v.entries)} is not in the lattice")
    verdict = is_cover(configuration_of(L), vectors, with_map=args.with_map)
    _emit(serialize.cover_verdict_to_obj(verdict), args.output)
    return 0 if verdict.passed else 1


def _cmd_check_radical(args) -> int:
    L = _read_lattice(args.lattice)
    vectors, _ = _read_vectors(args.vectors)
    char = _parse_char(args.char)
    verdict = check_radical_generation(L, vectors, char)
    _emit(serialize.radical_verdict_to_obj(verdict), args.output)
    return 0 if verdict.passed else 1


def _cmd_make_cover(args) -> int:
    L = _read_lattice(args.lattice)
    A = configuration_of(L)
    vectors = construct_simplex_cover(L, A)
    _emit(serialize.vectors_to_obj(vectors), args.output)
    return 0


def _cmd_make_generators(args) -> int:
    L = _read_lattice(args.lattice)
    char = _parse_char(args.char)
    F = prepare_full(L)
    vectors = construct_char0(F) if char == 0 else construct_charp(F, char)
    _emit(serialize.vectors_to_obj(vectors), args.output)
    return 0


def _cmd_ci(args) -> int:
    L = _read_lattice(args.lattice)
    verdict = ci_search(L, args.bound)
    _emit(serialize.ci_verdict_to_obj(verdict), args.output)
    return 0 if verdict.status == CI_CERTIFIED else 1


def _cmd_min_cover(args) -> int:
    L = _read_lattice(args.lattice)
    vectors, _ = _read_vectors(args.vectors)
    for v in vectors:
        if not contains(L, v):
            raise UsageError(f"vector {list(v.entries)} is not in the lattice")
    result = min_cover_size(configuration_of(L), vectors, args.limit)
    _emit(serialize.min_cover_to_obj(result), args.output)
    return 0


def _cmd_instance(args) -> int:
    spec = args.spec
    if spec == "veronese33":
        inst = instance_veronese33()
    elif spec.startswith("ojeda:"):
        inst = instance_ojeda(int(spec.split(":", 1)[1]))
    elif spec.startswith("random:"):
        parts = spec.split(":", 1)[1].split(",")
        if len(parts) != 4:
            raise UsageError("random instance needs M,R,SEED,BOUND")
        m, r, seed, bound = (int(p) for p in parts)
        lattice = random_positive_lattice(m, r, seed, bound)
        _emit(serialize.lattice_to_obj(lattice), args.output)
        return 0
    else:
        raise UsageError(f"unknown instance {spec!r}")
    _emit(serialize.lattice_to_obj(inst.lattice), args.output)
    if args.vectors_out:
        names = sorted(inst.named)
        _emit(serialize.vectors_to_obj([inst.named[n] for n in names], names), args.vectors_out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latrad",
        description="Exact certificates for binomial generation of lattice ideal radicals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("faces", help="face supports of the cone, with witnesses")
    p.add_argument("lattice")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_faces)

    p = sub.add_parser("check-cover", help="does the vector set cover the configuration")
    p.add_argument("lattice")
    p.add_argument("vectors")
    p.add_argument("--with-map", action="store_true", help="emit one covering vector per non-face subset")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_check_cover)

    p = sub.add_parser("check-radical", help="radical-generation criterion in a characteristic")
    p.add_argument("--char", required=True, metavar="{0|p}")
    p.add_argument("lattice")
    p.add_argument("vectors")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_check_radical)

    p = sub.add_parser("make-cover", help="cover of size m-n for a simplex cone")
    p.add_argument("lattice")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_make_cover)

    p = sub.add_parser("make-generators", help="radical generators for a full configuration")
    p.add_argument("--char", required=True, metavar="{0|p}")
    p.add_argument("lattice")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_make_generators)

    p = sub.add_parser("ci", help="bounded complete-intersection certificate search")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("lattice")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_ci)

    p = sub.add_parser("instance", help="write a built-in or random instance")
    p.add_argument("spec", metavar="{veronese33|ojeda:M|random:M,R,SEED,BOUND}")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--vectors-out", help="also write the named vectors of a built-in instance")
    p.set_defaults(func=_cmd_instance)

    p = sub.add_parser("min-cover", help="smallest cover among subsets of a pool")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("lattice")
    p.add_argument("vectors")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_min_cover)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
