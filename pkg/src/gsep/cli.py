"""Command-line front end.

    gsep <verb> [options] INPUT [INPUT2]

INPUT is a matrix file (``"r n"`` header then rows) or, if its name ends in
``.graph``, a graph file (``"V E"`` header then ``tail head`` lines).  Output
is JSON by default.  Exit codes: 0 success, 1 internal theorem violation,
2 invalid input, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cuts, equivalence, linalg, matroid, polytope, toric
from .errors import GsepError, InvalidArgumentError, ParseError, TheoremViolation, ValidationError

VERBS = (
    "check", "info", "bases", "circuits", "cuts", "flows", "facets", "polar-points",
    "graver", "groebner", "triangulate", "hstar", "gamma", "equiv", "from-graph",
)


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def load_rep(path: str) -> matroid.RegularRep:
    text = _read_text(path)
    if path.endswith(".graph"):
        return matroid.from_graph(matroid.parse_graph(text))
    return matroid.from_matrix(linalg.parse_matrix(text))


def read_correspondence(path: str, n: int) -> tuple:
    sigma = [None] * n
    for line in _read_text(path).splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            i, j = (int(t) for t in line.split())
        except ValueError:
            raise ParseError(f"bad correspondence line {line!r}") from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"correspondence entry {line!r} out of range")
        sigma[i - 1] = j - 1
    if None in sigma:
        raise ParseError("correspondence does not cover every element")
    return tuple(sigma)


def _labels(rep, sets):
    return [list(s) for s in rep.label_sets(sets)]


def _vectors(vs):
    return [list(v) for v in vs]


def _simple(rep):
    s = matroid.simplify(rep)
    return s, s is not rep


# ---------------------------------------------------------------------------
# verbs


def cmd_check(args):
    rep = load_rep(args.input[0])
    return {
        "valid": True,
        "rank": rep.r,
        "n": rep.n,
        "weakly_unimodular": True,
        "totally_unimodular": linalg.is_totally_unimodular(rep.matrix),
        "simple": rep.is_simple(),
        "standard_form": rep.is_standard_form(),
    }


def cmd_info(args):
    rep = load_rep(args.input[0])
    return {
        "rank": rep.r,
        "n": rep.n,
        "ground_labels": list(rep.ground_labels),
        "matrix": rep.matrix.to_rows(),
        "simple": rep.is_simple(),
        "bipartite": matroid.is_bipartite(rep),
        "bases": len(rep.bases),
        "circuits": len(rep.circuits),
        "dual_rank": rep.n - rep.r,
    }


def cmd_bases(args):
    rep = load_rep(args.input[0])
    return {"ground_labels": list(rep.ground_labels), "bases": _labels(rep, rep.bases)}


def cmd_circuits(args):
    rep = load_rep(args.input[0])
    return {
        "ground_labels": list(rep.ground_labels),
        "circuits": _labels(rep, rep.circuits),
        "signed_circuits": _vectors(cuts.signed_circuits(rep)),
    }


def cmd_cuts(args):
    rep = load_rep(args.input[0])
    return {"k": args.k, "ground_labels": list(rep.ground_labels), "cuts": _vectors(cuts.k_cuts(rep, args.k))}


def cmd_flows(args):
    rep = load_rep(args.input[0])
    return {"k": args.k, "ground_labels": list(rep.ground_labels), "flows": _vectors(cuts.k_flows(rep, args.k))}


def cmd_facets(args):
    rep, simplified = _simple(load_rep(args.input[0]))
    p = polytope.build_polytope(rep)
    return {
        "simplified": simplified,
        "ground_labels": list(rep.ground_labels),
        "vertices": _vectors(p.vertices),
        "facets": [
            {"cut": list(f.cut), "normal": list(f.normal), "vertices": list(f.vertices)}
            for f in p.facet_certs
        ],
    }


def cmd_polar_points(args):
    rep, simplified = _simple(load_rep(args.input[0]))
    pts = polytope.polar_lattice_points(rep, args.k)
    mt = rep.matrix.T
    return {
        "simplified": simplified,
        "k": args.k,
        "points": _vectors(pts),
        "cuts": [list(mt.apply(u)) for u in pts],
    }


def cmd_graver(args):
    rep = load_rep(args.input[0])
    return {"binomials": [b.to_dict() for b in toric.graver_doubled(rep)]}


def cmd_groebner(args):
    rep, simplified = _simple(load_rep(args.input[0]))
    order = toric.MonomialOrder(rep.n)
    gb = toric.groebner_basis(rep, order)
    return {
        "simplified": simplified,
        "order": [toric.var_name(v, rep.n) for v in order.ranking],
        "binomials": [dict(b.to_dict(), type=b.kind) for b in gb],
        "leading_terms": [
            sorted(toric.var_name(v, rep.n) for v in s) for s in toric.initial_ideal(gb, order)
        ],
    }


def cmd_triangulate(args):
    rep, simplified = _simple(load_rep(args.input[0]))
    t = toric.triangulation(rep)
    return dict(t.to_dict(), simplified=simplified)


def cmd_hstar(args):
    rep, simplified = _simple(load_rep(args.input[0]))
    return {"simplified": simplified, "hstar": polytope.hstar(rep)}


def cmd_gamma(args):
    rep, simplified = _simple(load_rep(args.input[0]))
    h = polytope.hstar(rep)
    return {"simplified": simplified, "hstar": h, "gamma": polytope.gamma_from_hstar(h)}


def cmd_equiv(args):
    if len(args.input) != 2:
        raise InvalidArgumentError("equiv needs two inputs")
    m1, m2 = load_rep(args.input[0]), load_rep(args.input[1])
    if args.correspondence:
        sigma = read_correspondence(args.correspondence, m1.n)
    else:
        sigma = equivalence.matroid_isomorphism_search(m1, m2)
        if sigma is None:
            return {"equivalent": False}
    f, p = equivalence.unimodular_transform(m1, m2, sigma)
    return dict(
        {"equivalent": True, "correspondence": [s + 1 for s in sigma], "f": f.to_rows()},
        **p.to_dict(),
    )


def cmd_from_graph(args):
    g = matroid.parse_graph(_read_text(args.input[0]))
    rep = matroid.from_graph(g)
    return {"matrix": rep.matrix.to_rows(), "ground_labels": list(rep.ground_labels)}


COMMANDS = {
    "check": cmd_check, "info": cmd_info, "bases": cmd_bases, "circuits": cmd_circuits,
    "cuts": cmd_cuts, "flows": cmd_flows, "facets": cmd_facets, "polar-points": cmd_polar_points,
    "graver": cmd_graver, "groebner": cmd_groebner, "triangulate": cmd_triangulate,
    "hstar": cmd_hstar, "gamma": cmd_gamma, "equiv": cmd_equiv, "from-graph": cmd_from_graph,
}


# ---------------------------------------------------------------------------
# rendering


def render_text(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            lines.append(f"{key}:")
            for item in value:
                if isinstance(item, dict):
                    lines.append("  " + json.dumps(item, sort_keys=True))
                else:
                    lines.append("  " + " ".join(map(str, item)))
        elif isinstance(value, list):
            lines.append(f"{key}: " + " ".join(map(str, value)))
        elif isinstance(value, dict):
            lines.append(f"{key}: " + json.dumps(value, sort_keys=True))
        else:
            lines.append(f"{key}: {json.dumps(value)}")
    return "\n".join(lines) + "\n"


def render(payload: dict, fmt: str) -> str:
    if fmt == "text":
        return render_text(payload)
    return json.dumps(payload, sort_keys=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gsep", description=__doc__.split("\n\n")[0])
    p.add_argument("verb", choices=VERBS)
    p.add_argument("input", nargs="+", help="matrix (.mat) or graph (.graph) file")
    p.add_argument("--k", type=int, help="bound for cuts/flows (default 2) or polar dilation (default 1)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--correspondence", help="file of 'i j' lines for equiv")
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.k is None:
            args.k = 1 if args.verb == "polar-points" else 2
        if args.k < 1:
            raise InvalidArgumentError("--k must be at least 1")
        payload = COMMANDS[args.verb](args)
        code = 0
    except OSError as exc:
        payload = {"error": {"type": "IOError", "message": str(exc)}}
        code = 3
    except ValidationError as exc:
        payload = {"error": exc.to_dict()}
        code = 2
    except TheoremViolation as exc:
        payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        code = 1
    except GsepError as exc:
        payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        code = 1
    out = render(payload, args.format)
    if args.out and code == 0:
        Path(args.out).write_text(out, encoding="utf-8")
    else:
        stdout.write(out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
