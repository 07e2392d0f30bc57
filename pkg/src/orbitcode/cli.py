"""Command-line front-end: orbit, pluecker, ball, and distance queries.

Exit codes are contractual: 0 on success, 2 for unusable input (parse
failures, missing flags, shape mismatches), 3 for algebraic failures
(singular generator, invalid field order).  Route disagreements that
the library promises cannot happen exit with 1 so they are never
mistaken for clean runs.  All output is deterministic: the same
arguments produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import AlgebraError, ParseError
from .gf import GF, FieldSpec, parse_polynomial
from .grassmann import (
    Subspace,
    enumerate_grassmannian,
    in_ball,
    plucker_coordinates,
    subspace_distance,
)
from .linalg import FqMatrix, index_tuples
from .orbits import GeneratorSpec, generator_order, orbit
from .wedge import plucker_orbit


class UsageError(Exception):
    """Bad request shape; maps to exit code 2."""


def _field(args) -> FieldSpec:
    return GF(args.q, args.modulus) if args.modulus else GF(args.q)


def _generator(args, spec: FieldSpec) -> GeneratorSpec:
    blocks = [b for b in (s.strip() for s in args.blocks.split(";")) if b]
    if not blocks:
        raise UsageError("--blocks: no block polynomials given")
    try:
        parsed = [parse_polynomial(b, spec) for b in blocks]
    except ParseError as exc:
        raise UsageError(f"--blocks: {exc}") from exc
    return GeneratorSpec(spec, parsed)


def _subspace(spec: FieldSpec, text: str, flag: str) -> Subspace:
    try:
        return Subspace.from_text(spec, text)
    except ParseError as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _check_seed(seed: Subspace, g: GeneratorSpec):
    if seed.n != g.n:
        raise UsageError(
            f"--seed: ambient dimension {seed.n} does not match generator size {g.n}"
        )


def _emit(text: str):
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(payload: dict):
    _emit(json.dumps(payload, sort_keys=True, indent=2))


def cmd_orbit(args) -> int:
    spec = _field(args)
    g = _generator(args, spec)
    seed = _subspace(spec, args.seed, "--seed")
    _check_seed(seed, g)
    code = orbit(g, seed)
    if args.format == "json":
        _emit_json({"schema": 1, **code.as_dict()})
        return 0
    lines = [
        f"classification: {code.classification}",
        f"generator_order: {generator_order(g)}",
        f"orbit_length: {code.orbit_length}",
        f"min_distance: {'none' if code.min_distance is None else code.min_distance}",
    ]
    lines += [f"codeword {i}: {w.matrix.to_text()}" for i, w in enumerate(code.codewords)]
    _emit("\n".join(lines))
    return 0


def cmd_pluecker(args) -> int:
    spec = _field(args)
    g = _generator(args, spec)
    seed = _subspace(spec, args.seed, "--seed")
    _check_seed(seed, g)
    via_orbit = via_minors = None
    if args.method in ("orbit", "both"):
        via_orbit = [str(p) for p in plucker_orbit(g, seed)]
    if args.method in ("minors", "both"):
        via_minors = [str(plucker_coordinates(w)) for w in orbit(g, seed).codewords]
    points = via_orbit if via_orbit is not None else via_minors
    agree = None
    if args.method == "both":
        agree = via_orbit == via_minors
    legend = None
    if args.legend:
        legend = " ".join(str(t).replace(" ", "") for t in index_tuples(seed.n, seed.k))
    if args.format == "json":
        payload = {
            "schema": 1,
            "method": args.method,
            "n": seed.n,
            "k": seed.k,
            "points": points,
        }
        if agree is not None:
            payload["agree"] = agree
        if legend is not None:
            payload["legend"] = legend
        _emit_json(payload)
    else:
        lines = []
        if legend is not None:
            lines.append(f"tuples: {legend}")
        lines += points
        if agree is not None:
            lines.append("AGREE" if agree else "DISAGREE")
        _emit("\n".join(lines))
    return 0 if agree in (None, True) else 1


def cmd_ball(args) -> int:
    spec = _field(args)
    center = _subspace(spec, args.center, "--center")
    if args.t < 0:
        raise UsageError("--t: must be nonnegative")
    if args.t > center.k:
        raise UsageError(f"--t: {args.t} exceeds the subspace dimension {center.k}")
    if args.enumerate:
        members = [
            w.matrix.to_text()
            for w in enumerate_grassmannian(spec, center.k, center.n)
            if in_ball(w, center, args.t)
        ]
        if args.format == "json":
            _emit_json(
                {
                    "schema": 1,
                    "center": center.matrix.to_text(),
                    "t": args.t,
                    "count": len(members),
                    "members": members,
                }
            )
        else:
            _emit("\n".join(members + [f"members: {len(members)}"]))
        return 0
    if args.query is None:
        raise UsageError("--query: required unless --enumerate is given")
    query = _subspace(spec, args.query, "--query")
    if query.n != center.n:
        raise UsageError(
            f"--query: ambient dimension {query.n} does not match center ambient {center.n}"
        )
    if query.k != center.k:
        raise UsageError(
            f"--query: dimension {query.k} does not match center dimension {center.k}"
        )
    via_plucker = in_ball(query, center, args.t)
    via_distance = subspace_distance(query, center) <= 2 * args.t
    words = ["member" if via_plucker else "non-member",
             "member" if via_distance else "non-member"]
    agree = via_plucker == via_distance
    if args.format == "json":
        _emit_json(
            {
                "schema": 1,
                "center": center.matrix.to_text(),
                "query": query.matrix.to_text(),
                "t": args.t,
                "member_plucker": via_plucker,
                "member_distance": via_distance,
                "agree": agree,
            }
        )
    else:
        verdict = "/".join(words)
        _emit(verdict if agree else f"{verdict} DISAGREE")
    return 0 if agree else 1


def cmd_distance(args) -> int:
    spec = _field(args)
    u = _subspace(spec, args.u, "--u")
    v = _subspace(spec, args.v, "--v")
    if u.n != v.n:
        raise UsageError(f"--v: ambient dimension {v.n} does not match --u ambient {u.n}")
    d = subspace_distance(u, v)
    if args.format == "json":
        _emit_json(
            {
                "schema": 1,
                "u": u.matrix.to_text(),
                "v": v.matrix.to_text(),
                "distance": d,
            }
        )
    else:
        _emit(str(d))
    return 0


def _add_field_flags(p: argparse.ArgumentParser):
    p.add_argument("--q", type=int, required=True, help="field order (prime power)")
    p.add_argument("--modulus", help="extension modulus, e.g. 'x^2+x+1' or '1,1,1'")
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitcode",
        description="Cyclic orbit codes in the Grassmannian and their minor coordinates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", help="enumerate a cyclic orbit code")
    _add_field_flags(p)
    p.add_argument("--blocks", required=True, help="';'-separated block polynomials")
    p.add_argument("--seed", required=True, help="seed matrix, rows ';'-separated")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("pluecker", help="projective minor coordinates of an orbit")
    _add_field_flags(p)
    p.add_argument("--blocks", required=True, help="';'-separated block polynomials")
    p.add_argument("--seed", required=True, help="seed matrix, rows ';'-separated")
    p.add_argument("--method", choices=("orbit", "minors", "both"), default="both")
    p.add_argument("--legend", action="store_true", help="print the column-tuple order first")
    p.set_defaults(func=cmd_pluecker)

    p = sub.add_parser("ball", help="membership in a radius-2t ball")
    _add_field_flags(p)
    p.add_argument("--center", required=True, help="center subspace matrix")
    p.add_argument("--t", type=int, required=True, help="radius parameter (radius 2t)")
    p.add_argument("--query", help="query subspace matrix")
    p.add_argument("--enumerate", action="store_true", help="list all members instead")
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("distance", help="subspace distance between two subspaces")
    _add_field_flags(p)
    p.add_argument("--u", required=True, help="first subspace matrix")
    p.add_argument("--v", required=True, help="second subspace matrix")
    p.set_defaults(func=cmd_distance)

    return parser


def main(argv: "Sequence[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"orbitcode: error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"orbitcode: error: {exc}", file=sys.stderr)
        return 2
    except (AlgebraError, ZeroDivisionError) as exc:
        print(f"orbitcode: algebraic error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
