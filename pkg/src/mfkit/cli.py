"""Command-line interface.

Exit codes: 0 = success / positive verdict, 1 = negative verdict
(e.g. not isomorphic, quiver mismatch), 2 = error.

MFJSON is the serialization of a matrix factorization::

    {"characteristic": 5, "variables": ["x", "y", "z"],
     "f": "z^2+x*y", "A": [["z", "-y"], ["x", "z"]], "B": [["z", "y"], ["-x", "z"]]}

Polynomial strings follow the grammar
``expr := term (('+'|'-') term)*``, ``term := factor ('*' factor)*``,
``factor := INT | VAR | VAR '^' UINT`` with unary minus allowed on the first
term; over the rationals a coefficient may also be a fraction ``a/b`` so that
printed polynomials parse back.  A morphism file carries ``source`` and
``target`` MFJSON objects (sharing ``characteristic``/``variables``/``f``)
plus ``X`` and ``Y`` matrices.

Environment: ``MFKIT_GB_MAXDEG`` caps intermediate Groebner leading-term
degrees (default 64); ``MFKIT_SEED`` seeds the shuffle used by
``hom --shuffled-reruns`` (default 0).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import catalog as cat
from . import mf as mfmod
from . import quiver as qv
from .errors import MFKitError
from .fields import Field
from .matrices import PolyMatrix
from .poly import PolyContext


def _context(characteristic, variables):
    field = Field.rationals() if characteristic == 0 else Field.prime(characteristic)
    return PolyContext(field, tuple(variables))


def mf_to_json(m):
    return {
        "characteristic": m.ctx.field.characteristic,
        "variables": list(m.ctx.names),
        "f": str(m.f),
        "A": [[str(e) for e in row] for row in m.A.entries],
        "B": [[str(e) for e in row] for row in m.B.entries],
    }


def mf_from_json(data):
    ctx = _context(data["characteristic"], data["variables"])
    f = ctx.parse(data["f"])
    a = PolyMatrix.from_strings(ctx, data["A"])
    b = PolyMatrix.from_strings(ctx, data["B"])
    return mfmod.MatrixFactorization(f, a, b)


def morphism_from_json(data):
    ctx = _context(data["characteristic"], data["variables"])
    f = ctx.parse(data["f"])
    def load(block):
        return mfmod.MatrixFactorization(
            f,
            PolyMatrix.from_strings(ctx, block["A"]),
            PolyMatrix.from_strings(ctx, block["B"]),
        )
    source = load(data["source"])
    target = load(data["target"])
    x = PolyMatrix.from_strings(ctx, data["X"])
    y = PolyMatrix.from_strings(ctx, data["Y"])
    return mfmod.Morphism(source, target, x, y)


def _entries(spec):
    return cat.catalog_all(cat.parse_spec_string(spec))


def _dynkin_for(t):
    return qv.DynkinGraph(t.series, t.n)


def cmd_verify(args):
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            m = mf_from_json(json.load(fh))
        ok = mfmod.mf_verify(m)
        print("OK: AB=BA=fI" if ok else "FAIL: AB=BA=fI violated")
        return 0 if ok else 1
    entries = _entries(args.spec)
    good = sum(1 for e in entries if mfmod.mf_verify(e.mf))
    print(f"OK: {good}/{len(entries)} entries satisfy AB=BA=fI")
    return 0 if good == len(entries) else 1


def cmd_emit(args):
    entries = _entries(args.spec)
    if args.index is not None:
        payload = mf_to_json(entries[args.index - 1].mf)
    else:
        payload = [mf_to_json(e.mf) for e in entries]
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def cmd_hom(args):
    entries = _entries(args.spec)
    m = entries[args.i - 1].mf
    n = entries[args.j - 1].mf
    if args.shuffled_reruns:
        rng = random.Random(int(os.environ.get("MFKIT_SEED", "0")))
        dims = []
        for _ in range(args.shuffled_reruns):
            dims.append(mfmod.hom_space(m, n, shuffle=rng).dim)
        print(f"dims over {args.shuffled_reruns} shuffled reruns: {dims}")
        return 0 if len(set(dims)) == 1 else 1
    if args.radical:
        sub = mfmod.radical_space(m, n, check=False)
        print(f"dim rad Hom(M{args.i}, M{args.j}) = {sub.dim}")
        return 0
    hs = mfmod.hom_space(m, n)
    print(f"dim Hom(M{args.i}, M{args.j}) = {hs.dim}")
    if not args.dims_only:
        for k, phi in enumerate(hs.basis):
            print(f"basis[{k}].X = {[[str(e) for e in row] for row in phi.X.entries]}")
            print(f"basis[{k}].Y = {[[str(e) for e in row] for row in phi.Y.entries]}")
    return 0


def cmd_nullhomotopic(args):
    with open(args.file, "r", encoding="utf-8") as fh:
        phi = morphism_from_json(json.load(fh))
    witness = mfmod.is_null_homotopic(phi)
    if witness is None:
        print("NOT NULL-HOMOTOPIC")
        return 1
    print("NULL-HOMOTOPIC")
    print("H_A =", [[str(e) for e in row] for row in witness.HA.entries])
    print("H_B =", [[str(e) for e in row] for row in witness.HB.entries])
    return 0


def cmd_iso(args):
    entries = _entries(args.spec)
    m = entries[args.i - 1].mf
    n = entries[args.j - 1].mf
    verdict = mfmod.iso_test(m, n, strict=args.strict_nullstellensatz)
    print("ISOMORPHIC" if verdict else "NOT ISOMORPHIC")
    return 0 if verdict else 1


def cmd_rank(args):
    entries = _entries(args.spec)
    if args.index is not None:
        entries = [entries[args.index - 1]]
    for e in entries:
        print(f"{e.label}: rank {mfmod.mcm_rank(e.mf)}")
    return 0


def cmd_ar_triangle(args):
    entries = _entries(args.spec)
    m = entries[args.index - 1].mf
    psi, middle, degenerate = mfmod.ar_triangle(m)
    middle = mfmod.reduce_constant_pivots(middle)
    print(f"connecting morphism: M{args.index} -> shift(M{args.index})")
    if degenerate:
        print("note: rad End = 0; socle taken as the whole Hom space")
    print(f"middle term representative size: {middle.size}")
    if args.recognize:
        counts = mfmod.decompose(middle, [e.mf for e in entries])
        multiset = {e.label: c for e, c in zip(entries, counts) if c}
        print(f"middle term multiset: {multiset}")
    return 0


def cmd_quiver(args):
    t = cat.parse_spec_string(args.spec)
    q = qv.ar_quiver(t)
    if args.check_dynkin:
        target = qv.dynkin_double_quiver(_dynkin_for(t))
        perm = qv.quiver_equal(q, target, up_to_relabeling=True)
        if perm is False:
            print(f"MISMATCH: not the {t.series}{t.n} double quiver")
            return 1
        print(f"MATCH: {t.series}{t.n} double quiver")
        return 0
    print(qv.emit(q, args.format))
    return 0


def cmd_knit(args):
    t = cat.parse_spec_string(args.spec)
    entries = cat.catalog_all(t)
    seed_entry = entries[args.seed - 1]
    rep = qv.knit_from_seed(
        seed_entry.mf,
        known=[(seed_entry.label, seed_entry.mf)],
        max_steps=args.max_steps,
    )
    print(f"closure: {rep.closed}; labels: {rep.labels}")
    print(f"sizes: {rep.sizes()}")
    for s in rep.steps:
        new = f" new={s.new_label}" if s.new_label else ""
        print(f"step {s.source}: middle size {s.middle_size}, recognized {s.recognized}{new}")
    target = qv.dynkin_double_quiver(_dynkin_for(t))
    perm = qv.quiver_equal(rep.quiver, target, up_to_relabeling=True)
    print("quiver matches Dynkin double quiver" if perm is not False else "quiver mismatch")
    return 0 if perm is not False else 1


def cmd_fundamental_cycle(args):
    t = cat.parse_spec_string(args.spec)
    z = qv.fundamental_cycle(_dynkin_for(t))
    print(f"fundamental cycle coefficients: {z.coefficients}")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="mfkit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check AB=BA=fI for a catalog family or MFJSON file")
    s.add_argument("spec", nargs="?", help="family spec, e.g. A3@0, D8^2@2, E7^1@3")
    s.add_argument("--file", help="MFJSON file to verify instead of a catalog family")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("emit", help="emit catalog entries as MFJSON")
    s.add_argument("spec")
    s.add_argument("--index", type=int)
    s.set_defaults(func=cmd_emit)

    s = sub.add_parser("hom", help="Hom space between two catalog entries")
    s.add_argument("--spec", required=True)
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--dims-only", action="store_true")
    s.add_argument("--radical", action="store_true")
    s.add_argument("--shuffled-reruns", type=int, default=0,
                   help="recompute with shuffled generators this many times")
    s.set_defaults(func=cmd_hom)

    s = sub.add_parser("nullhomotopic", help="test a morphism file for null-homotopy")
    s.add_argument("--file", required=True)
    s.set_defaults(func=cmd_nullhomotopic)

    s = sub.add_parser("iso", help="isomorphism test between two catalog entries")
    s.add_argument("--spec", required=True)
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--strict-nullstellensatz", action="store_true")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("rank", help="cokernel module ranks")
    s.add_argument("spec")
    s.add_argument("--index", type=int)
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("ar-triangle", help="Auslander-Reiten triangle of an entry")
    s.add_argument("spec")
    s.add_argument("--index", type=int, required=True)
    s.add_argument("--recognize", action="store_true")
    s.set_defaults(func=cmd_ar_triangle)

    s = sub.add_parser("quiver", help="Auslander-Reiten quiver of a family")
    s.add_argument("--spec", required=True)
    s.add_argument("--format", choices=("dot", "json"), default="json")
    s.add_argument("--check-dynkin", action="store_true")
    s.set_defaults(func=cmd_quiver)

    s = sub.add_parser("knit", help="knit the component of a seed entry")
    s.add_argument("--spec", required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--max-steps", type=int, default=32)
    s.set_defaults(func=cmd_knit)

    s = sub.add_parser("fundamental-cycle", help="Laufer fundamental cycle of the Dynkin graph")
    s.add_argument("--spec", required=True)
    s.set_defaults(func=cmd_fundamental_cycle)
    return p


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except MFKitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
