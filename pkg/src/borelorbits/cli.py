"""Command-line interface: JSON in, JSON or DOT out.

Exit status is 0 on success, 1 on a domain error (a JSON error object is
written to stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import degeneration as deg
from . import fforacle, melnikov, normalform, olp, quiverrep
from .classify import classify, classify_parabolic, profile_of
from .errors import DomainError, InternalError
from .exactlinalg import Mat


def _load(source: str):
    """Parse JSON from a path, ``-`` (stdin) or an inline document."""
    try:
        if source == "-":
            text = sys.stdin.read()
        elif source.lstrip().startswith(("{", "[")):
            text = source
        else:
            text = Path(source).read_text()
    except OSError as exc:
        raise DomainError("io_error", f"cannot read {source}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError("malformed_json", f"{source}: {exc}") from None


def _matrix(source: str) -> Mat:
    return Mat.from_json(_load(source))


def _pattern(source: str) -> olp.OrientedLinkPattern:
    return olp.require_valid(olp.OrientedLinkPattern.from_json(_load(source)))


def _involution(source: str) -> tuple[int, ...]:
    obj = _load(source)
    try:
        return olp.involution_from_cycles(int(obj["n"]), obj.get("cycles", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError("malformed_json", f"involution JSON needs n and cycles: {exc}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


_IND = re.compile(r"^[UVWuvw]\d")


def _rep(token: str, n: int | None, dims: list[int] | None) -> quiverrep.BoundQuiverRep:
    if _IND.match(token):
        if n is None:
            raise DomainError("missing_n", "--n is required when naming indecomposables")
        return quiverrep.indecomposable(quiverrep.IndecomposableId.parse(token), n)
    A = _matrix(token)
    return quiverrep.rep_of_matrix(A, dims or list(range(1, A.rows + 1)))


# command handlers return a JSON-able object or a string


def cmd_classify(args):
    A = _matrix(args.matrix)
    if args.parabolic:
        return classify_parabolic(A, args.parabolic).to_json()
    out = classify(A).to_json()
    if args.profile:
        out["profile"] = [list(r) for r in profile_of(A).d]
    return out


def cmd_enumerate(args):
    pats = olp.enumerate_patterns(args.n)
    return {"n": args.n, "count": len(pats), "patterns": [p.to_json() for p in pats]}


def cmd_poset(args):
    if args.dot or args.format == "dot":
        return deg.hasse_dot(args.n)
    pats = olp.enumerate_patterns(args.n)
    return {"n": args.n, "nodes": [p.label() for p in pats],
            "covers": [[a.label(), b.label()] for a, b in deg.covers(args.n)]}


def cmd_covers(args):
    return deg.covers_json(args.n)


def cmd_closure(args):
    p = _pattern(args.pattern)
    found = deg.move_closure(p) if args.moves else deg.closure_set(p)
    return {"pattern": p.to_json(), "closure": [q.to_json() for q in found]}


def cmd_moves(args):
    p = _pattern(args.pattern)
    return {"pattern": p.to_json(), "moves": [q.to_json() for q in deg.apply_moves(p)]}


def cmd_leq(args):
    p, q = _pattern(args.first), _pattern(args.second)
    value = quiverrep.zwara_leq(p, q) if args.hom else deg.leq_deg(p, q)
    return {"leq": value}


def cmd_profile(args):
    return deg.profile(_pattern(args.pattern)).to_json()


def cmd_mel_rank(args):
    sigma = _involution(args.involution)
    return {"n": len(sigma), "R": [list(r) for r in melnikov.rank_matrix(melnikov.n_sigma(sigma))]}


def cmd_mel_leq(args):
    return {"leq": melnikov.melnikov_leq(_involution(args.first), _involution(args.second))}


def cmd_rep_hom(args):
    X, Y = _rep(args.source, args.n, args.dims), _rep(args.target, args.n, args.dims)
    return {"hom_dim": quiverrep.hom_dim(X, Y)}


def cmd_rep_decompose(args):
    A = _matrix(args.matrix)
    return quiverrep.krull_schmidt(quiverrep.rep_of_matrix(A, args.dims or list(range(1, A.rows + 1)))).to_json()


def cmd_nf_check(args):
    return normalform.genericity(_matrix(args.matrix)).to_json()


def cmd_nf_compute(args):
    H, g = normalform.normal_form(_matrix(args.matrix))
    return {"H": H.to_json(), "g": g.to_json()}


def cmd_nf_semiinv(args):
    A = _matrix(args.matrix)
    datum = normalform.SemiinvariantDatum.from_json(_load(args.datum))
    value = normalform.semiinvariant(A, datum)
    return {"value": str(value), "weight": list(normalform.weight(datum, A.rows))}


def cmd_census(args):
    return fforacle.census(args.n, args.q).to_json()


def cmd_invariance(args):
    return fforacle.invariance_check(args.n, args.q).to_json()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="borelorbits", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="2-nilpotent matrix -> oriented link pattern")
    p.add_argument("matrix", help="matrix JSON: path, '-' or inline")
    p.add_argument("--profile", action="store_true", help="include the intersection profile")
    p.add_argument("--parabolic", type=_int_list, metavar="B1,B2,...", help="block sizes of a parabolic")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="list all oriented link patterns on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("poset", help="Hasse diagram of the degeneration order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("covers", help="minimal degenerations as JSON")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_covers)

    p = sub.add_parser("closure", help="all patterns in the orbit closure")
    p.add_argument("pattern")
    p.add_argument("--moves", action="store_true", help="generate by local moves instead of the p/q test")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("moves", help="one step of local moves")
    p.add_argument("pattern")
    p.set_defaults(func=cmd_moves)

    p = sub.add_parser("leq", help="does the first pattern degenerate to the second?")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--hom", action="store_true", help="decide with hom dimensions instead of p/q")
    p.set_defaults(func=cmd_leq)

    p = sub.add_parser("profile", help="p/q statistics of a pattern")
    p.add_argument("pattern")
    p.set_defaults(func=cmd_profile)

    mel = sub.add_parser("melnikov", help="rank matrices of involutions").add_subparsers(dest="sub", required=True)
    p = mel.add_parser("rank-matrix")
    p.add_argument("involution", help='e.g. {"n":5,"cycles":[[1,2],[3,5]]}')
    p.set_defaults(func=cmd_mel_rank)
    p = mel.add_parser("leq", help="first involution below the second")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_mel_leq)

    rep = sub.add_parser("rep", help="quiver representation oracle").add_subparsers(dest="sub", required=True)
    p = rep.add_parser("hom-dim", help="dim Hom(X, Y); X, Y are matrices or ids like U2,1 V3 W1,2")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--n", type=int)
    p.add_argument("--dims", type=_int_list)
    p.set_defaults(func=cmd_rep_hom)
    p = rep.add_parser("decompose", help="Krull-Schmidt multiplicities")
    p.add_argument("matrix")
    p.add_argument("--dims", type=_int_list)
    p.set_defaults(func=cmd_rep_decompose)

    nf = sub.add_parser("nf", help="generic normal form and semiinvariants").add_subparsers(dest="sub", required=True)
    p = nf.add_parser("check")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_nf_check)
    p = nf.add_parser("compute")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_nf_compute)
    p = nf.add_parser("semiinv")
    p.add_argument("matrix")
    p.add_argument("datum", help='e.g. {"a":[1],"b":[1],"P":[[[0,1]]]}')
    p.set_defaults(func=cmd_nf_semiinv)

    orc = sub.add_parser("oracle", help="finite-field brute force").add_subparsers(dest="sub", required=True)
    for name, func in (("census", cmd_census), ("invariance", cmd_invariance)):
        p = orc.add_parser(name)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
        p.set_defaults(func=func)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except DomainError as exc:
        stderr.write(json.dumps(exc.to_json(), separators=(",", ":")) + "\n")
        return 1
    except InternalError as exc:
        stderr.write(json.dumps({"error": "internal_error", "message": str(exc)}, separators=(",", ":")) + "\n")
        return 1
    if isinstance(result, str):
        stdout.write(result)
    else:
        stdout.write(json.dumps(result, separators=(",", ":")) + "\n")
    return 0


def main() -> None:
    sys.exit(run())
