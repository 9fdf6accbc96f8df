"""Command-line driver with bit-exact JSON I/O.

A pencil document looks like

    {
      "field": {"degree": 2, "modulus": 7},
      "n": 3,
      "q0": [[1, 1, 1], [2, 3, 1]],
      "q1": [[1, 2, 1]]
    }

Coefficient triples are (i, j, element) with 1 <= i <= j <= n; field
elements are the integers whose binary digits are the power-basis
coordinates, so documents round-trip byte-identically.  "modulus" may be
omitted to get the fixed default modulus for that degree.  Extension
fields created on demand are reported in the output (with their modulus)
so results are reproducible without hidden state.

Exit codes: 0 success, 1 precondition violation (with a machine-readable
error object), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .autos import (
    aut_x,
    automorphism_group,
    pair_algebra,
    reflections,
    reflections_match_idempotents,
)
from .errors import InputError, NotRegularError, PreconditionError
from .field import GF, Field, field_from_modulus
from .geometry import canonical_plane, enumerate_generators, quasi_split_over
from .invariants import arf_invariant, is_isomorphic, r_invariant
from .lattice import cartan_d, lattice_for
from .normalform import extract_normal_form
from .pencil import Pencil
from .quadform import QuadraticForm
from .verify import run_suite


def parse_field(doc: dict) -> Field:
    try:
        fd = doc["field"]
        degree = int(fd["degree"])
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"bad field description: {e}")
    if "modulus" in fd:
        try:
            gf = field_from_modulus(int(fd["modulus"]))
        except ValueError as e:
            raise InputError(str(e))
        if gf.degree != degree:
            raise InputError("field degree does not match the modulus")
        return gf
    return GF(degree)


def parse_form(gf: Field, n: int, triples, name: str) -> QuadraticForm:
    table = {}
    for item in triples:
        try:
            i, j, c = (int(x) for x in item)
        except (TypeError, ValueError):
            raise InputError(f"{name}: coefficient triple {item!r} is malformed")
        if not (1 <= i <= j <= n):
            raise InputError(f"{name}: indices {(i, j)} violate 1 <= i <= j <= n")
        if not (0 <= c < gf.order):
            raise InputError(f"{name}: {c} is not an element of the field")
        key = (i - 1, j - 1)
        table[key] = table.get(key, 0) ^ c
    return QuadraticForm.from_table(gf, n, table)


def parse_pencil(doc: dict) -> Pencil:
    if not isinstance(doc, dict):
        raise InputError("document must be a JSON object")
    gf = parse_field(doc)
    try:
        n = int(doc["n"])
        q0 = parse_form(gf, n, doc["q0"], "q0")
        q1 = parse_form(gf, n, doc["q1"], "q1")
    except KeyError as e:
        raise InputError(f"missing document key: {e}")
    try:
        return Pencil(q0, q1)
    except ValueError as e:
        raise InputError(str(e))


def serialize_pencil(p: Pencil) -> dict:
    def triples(q):
        return [[i + 1, j + 1, c] for (i, j), c in q.coeffs]

    return {
        "field": {"degree": p.gf.degree, "modulus": p.gf.modulus},
        "n": p.n,
        "q0": triples(p.q0),
        "q1": triples(p.q1),
    }


def field_info(gf: Field) -> dict:
    return {"degree": gf.degree, "modulus": gf.modulus}


def _matrix(m) -> list:
    return [list(row) for row in m]


# ---------------------------------------------------------------------------
# subcommands


def cmd_halfdisc(p: Pencil, args) -> dict:
    return {"a": list(p.half_discriminant())}


def cmd_regular(p: Pencil, args) -> dict:
    return {"regular": p.is_regular(), "a": list(p.half_discriminant())}


def cmd_normalform(p: Pencil, args) -> dict:
    nf = extract_normal_form(p)
    return {
        "a": list(nf.a),
        "r": list(nf.r),
        "basis": _matrix(nf.basis.basis_matrix),
    }


def cmd_rinv(p: Pencil, args) -> dict:
    nf = extract_normal_form(p)
    rinv = r_invariant(nf)
    rep, trivial = rinv.algebra.coset_reduce(rinv.value)
    return {
        "f": list(rinv.algebra.f),
        "r_coeffs": list(rinv.coeffs),
        "value": list(rinv.value),
        "canonical_rep": list(rep),
        "trivial_class": trivial,
    }


def cmd_autos(p: Pencil, args) -> dict:
    group = automorphism_group(p)
    algebra, _ = pair_algebra(p.ensure_an_nonzero()[0])
    return {
        "order": len(group),
        "components": algebra.num_components,
        "elements": [
            {"s_coords": list(g.s_coeffs), "matrix": _matrix(g.matrix)}
            for g in group
        ],
    }


def _splitting_field(p: Pencil, args) -> Field:
    if getattr(args, "ext_degree", None):
        return GF(p.gf.degree * args.ext_degree)
    from .geometry import splitting_degree

    return GF(p.gf.degree * splitting_degree(p))


def cmd_reflections(p: Pencil, args) -> dict:
    ext = _splitting_field(p, args)
    refl = reflections(p, ext)
    return {
        "ext": field_info(ext),
        "reflections": [
            {
                "root": list(r.root),
                "singular_vector": list(r.singular_vector),
                "matrix": _matrix(r.matrix),
            }
            for r in refl
        ],
        "match_idempotents": (
            reflections_match_idempotents(p, ext)
            if p.half_discriminant()[p.n] != 0
            else None
        ),
    }


def cmd_generators(p: Pencil, args) -> dict:
    if getattr(args, "ext_degree", None):
        ext = GF(p.gf.degree * args.ext_degree)
    else:
        j, _, qs_ext = quasi_split_over(p)
        from .geometry import splitting_degree

        d = splitting_degree(p)
        lcm = d * j // _gcd(d, j)
        ext = GF(p.gf.degree * lcm)
    gens = enumerate_generators(p, ext)
    return {
        "ext": field_info(ext),
        "count": len(gens),
        "generators": [_matrix(g.basis) for g in gens],
    }


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def cmd_canonical_plane(p: Pencil, args) -> dict:
    cp = canonical_plane(p)
    return {
        "l0": list(cp.l0),
        "l1": list(cp.l1),
        "point_basis": _matrix(cp.point_basis),
    }


def cmd_arf(p: Pencil, args) -> dict:
    nf = extract_normal_form(p)
    data = arf_invariant(nf)
    return {
        "arf": list(data.arf),
        "arf_class": list(data.arf_class),
        "matches_r": data.matches_r,
        "qa_w": [list(x) for x in data.qa_w],
        "qa_v": [list(x) for x in data.qa_v],
    }


def cmd_lattice(p: Pencil, args) -> dict:
    if getattr(args, "ext_degree", None):
        ext = GF(p.gf.degree * args.ext_degree)
    else:
        j, _, _ = quasi_split_over(p)
        from .geometry import splitting_degree

        d = splitting_degree(p)
        ext = GF(p.gf.degree * (d * j // _gcd(d, j)))
    refl = reflections(p, ext)
    lat = lattice_for(p, ext, refl)
    sign = (-1) ** (p.m - 1)
    expected = [[sign * x for x in row] for row in cartan_d(p.m)]
    return {
        "ext": field_info(ext),
        "rank": lat.rank,
        "gram_e": _matrix(lat.gram),
        "gram_alpha": _matrix(lat.gram_alpha),
        "cartan_sign": sign,
        "is_signed_cartan_d": _matrix(lat.gram_alpha) == expected,
        "lam_empty_in_e": (
            list(lat.lam_empty_in_e) if lat.lam_empty_in_e else None
        ),
        "line_gram": _matrix(lat.line_gram),
    }


def cmd_autx(p: Pencil, args) -> dict:
    ext = _splitting_field(p, args)
    ax = aut_x(p, ext)
    return {
        "ext": field_info(ax.ext),
        "order": ax.order,
        "pair_autos": [_matrix(g) for g in ax.pair_autos],
        "g_elements": [_matrix(g) for g in ax.g_elements],
        "g_lifts": [_matrix(g) for g in ax.g_lifts],
        "mult_table": _matrix(ax.mult_table),
    }


SINGLE_DOC_COMMANDS = {
    "halfdisc": cmd_halfdisc,
    "regular": cmd_regular,
    "normalform": cmd_normalform,
    "rinv": cmd_rinv,
    "autos": cmd_autos,
    "reflections": cmd_reflections,
    "generators": cmd_generators,
    "canonical-plane": cmd_canonical_plane,
    "arf": cmd_arf,
    "lattice": cmd_lattice,
    "autx": cmd_autx,
}


def _read_json(path: str | None):
    try:
        if path:
            with open(path, "r", encoding="utf-8") as fh:
                return json.load(fh)
        return json.load(sys.stdin)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read document: {e}")


def _emit(payload: dict, args) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qpencil",
        description="Exact classification of pencils of quadratic forms on "
        "odd-dimensional spaces in characteristic 2.",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    for name in SINGLE_DOC_COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--in", dest="infile", default=None,
                        help="pencil document (default: stdin)")
        sp.add_argument("--out", dest="out", default=None)
        if name in ("reflections", "generators", "lattice", "autx"):
            sp.add_argument("--ext-degree", dest="ext_degree", type=int,
                            default=None,
                            help="relative extension degree (default: "
                            "smallest adequate field)")
    iso = sub.add_parser("isiso")
    iso.add_argument("first", help="first pencil document")
    iso.add_argument("second", help="second pencil document")
    iso.add_argument("--out", dest="out", default=None)
    ver = sub.add_parser("verify")
    ver.add_argument("--scale", choices=("small", "full"), default="small")
    ver.add_argument("--out", dest="out", default=None)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            results = run_suite(args.scale)
            for res in results:
                print(res.line(), file=sys.stderr)
            payload = {
                "scale": args.scale,
                "results": [
                    {
                        "tag": r.tag,
                        "description": r.description,
                        "passed": r.passed,
                        "checked": r.checked,
                        "seconds": round(r.seconds, 3),
                        "detail": r.detail,
                    }
                    for r in results
                ],
                "all_passed": all(r.passed for r in results),
            }
            _emit(payload, args)
            return 0 if payload["all_passed"] else 1
        if args.command == "isiso":
            p1 = parse_pencil(_read_json(args.first))
            p2 = parse_pencil(_read_json(args.second))
            ok, witness = is_isomorphic(p1, p2)
            _emit(
                {
                    "isomorphic": ok,
                    "witness": _matrix(witness) if witness else None,
                },
                args,
            )
            return 0
        pencil = parse_pencil(_read_json(args.infile))
        payload = SINGLE_DOC_COMMANDS[args.command](pencil, args)
        _emit(payload, args)
        return 0
    except InputError as e:
        _emit({"error": {"type": "input", "message": str(e)}}, args)
        return 2
    except NotRegularError as e:
        _emit({"error": {"type": "not-regular", "message": str(e)}}, args)
        return 1
    except PreconditionError as e:
        _emit(
            {
                "error": {
                    "type": "precondition",
                    "message": str(e),
                    "info": getattr(e, "info", {}),
                }
            },
            args,
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
