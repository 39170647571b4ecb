"""``troplink`` command line: build a link, compute its homology, check it against oracles.

Exit status is 0 when every check passes, 1 when a check fails and 2 when
the input cannot be read.  Reports go to stdout as markdown, or as
canonical JSON with ``--json``.  Set ``TROPLINK_LOG=debug`` for progress
messages on stderr.

Weights with a leading minus sign must be attached to the flag, for example
``troplink initial "x1 + x2 + 1" --w=-1,-1``.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from itertools import product
from pathlib import Path
from typing import Callable

from .complex import (
    homology_of_chain_complex,
    order_complex,
    reduced_betti,
    reduced_betti_minus_one,
    reduced_euler_characteristic,
)
from .fan import COMBINATORIAL, GEOMETRIC, Fan, crosscut_complex, link_poset, support_contains, validate_fan
from .fixtures import write_fixtures
from .generators import ci_skeleton_link, initial_form, in_tropical_hypersurface, tree_space_link, tropical_hypersurface_fan
from .matroid import bergman_fan, flats_lattice, matroid_from_json, mobius_top
from .polyparse import parse_polynomial
from .report import OracleRow, VerificationReport, sha256_bytes
from .strata import IncidenceError, StratificationIncidence, dual_complex, hat_link, weight_row_complex

log = logging.getLogger("troplink")

# fans with at most this many cones also get the crosscut/order-complex comparison
SMALL_FAN = 400


class InputError(Exception):
    """Unreadable or invalid input; maps to exit status 2."""


def _read_json(path: str):
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(raw), sha256_bytes(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path}: not UTF-8 text") from None


def _parse(path: str, build: Callable):
    data, digest = _read_json(path)
    try:
        return build(data), digest
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _cell_euler(poset) -> int:
    """Reduced Euler characteristic from cell counts of a regular CW complex."""
    return -1 + sum((-1) ** poset.dims[e] for e in poset.elements)


def _betti_euler(betti, empty: bool) -> int:
    return -1 if empty else sum((-1) ** i * b for i, b in enumerate(betti))


def _fan_link_betti(fan: Fan, rep: VerificationReport) -> list[int]:
    poset = link_poset(fan)
    if fan.is_simplicial():
        cx = crosscut_complex(fan)
        rep.notes.append("simplicial fan: link computed as the crosscut complex on the rays")
    else:
        cx = order_complex(poset)
        rep.notes.append("link computed as the order complex of the face poset")
    betti = reduced_betti(cx)
    rep.details["link f-vector"] = list(cx.f_vector())
    rep.oracles.append(OracleRow.compare("Euler characteristic (cells vs Betti)", _cell_euler(poset), _betti_euler(betti, cx.is_empty())))
    if fan.is_simplicial() and len(fan.cones) <= SMALL_FAN:
        rep.oracles.append(OracleRow.compare("crosscut vs order complex", reduced_betti(order_complex(poset)), betti))
    return betti


def cmd_link(args) -> VerificationReport:
    fan, digest = _parse(args.fan, Fan.from_json)
    level = GEOMETRIC if args.geometric else COMBINATORIAL
    check = validate_fan(fan, level)
    if not check.ok:
        raise InputError(f"{args.fan}: not a valid fan ({level}): " + "; ".join(check.violations[:5]))
    rep = VerificationReport("link", args.fan, [], input_sha256=digest)
    rep.details["validation"] = level
    rep.details["cones"] = len(fan.cones)
    rep.details["pure"] = check.pure
    rep.betti = _fan_link_betti(fan, rep)
    return rep


def cmd_bergman(args) -> VerificationReport:
    m, digest = _parse(args.matroid, matroid_from_json)
    if m.loops():
        raise InputError(f"{args.matroid}: matroid has loops {sorted(m.loops())}; the Bergman fan needs a loopless matroid")
    fan = bergman_fan(m)
    rep = VerificationReport("bergman", args.matroid, [], input_sha256=digest)
    rep.details["rank"] = m.rank
    rep.details["ground set size"] = m.n
    cx = crosscut_complex(fan)
    rep.betti = reduced_betti(cx)
    mu = abs(mobius_top(flats_lattice(m)))
    top = rep.betti[-1] if rep.betti else reduced_betti_minus_one(cx)
    rep.oracles.append(OracleRow.compare("top Betti vs |Moebius(0,1)|", mu, top))
    rep.oracles.append(OracleRow.compare("link dimension", m.rank - 2, rep.top_dimension))
    return rep


def cmd_trees(args) -> VerificationReport:
    if args.n < 4:
        raise InputError(f"tree space needs n >= 4 leaves, got {args.n}")
    cx = tree_space_link(args.n)
    rep = VerificationReport("trees", f"n={args.n}", reduced_betti(cx), input_sha256=sha256_bytes(str(args.n).encode()))
    rep.details["f-vector"] = list(cx.f_vector())
    rep.oracles.append(OracleRow.compare("Euler characteristic (cells vs Betti)", reduced_euler_characteristic(cx), _betti_euler(rep.betti, False)))
    rep.oracles.append(OracleRow.compare("link dimension", args.n - 4, rep.top_dimension))
    return rep


def cmd_skeleton(args) -> VerificationReport:
    fan, digest = _parse(args.fan, Fan.from_json)
    r = fan.ambient_rank - fan.lineality_dim
    try:
        poset = ci_skeleton_link(fan, args.codim)
    except ValueError as exc:
        raise InputError(f"{args.fan}: {exc}") from None
    betti = reduced_betti(order_complex(poset))
    rep = VerificationReport("skeleton", f"{args.fan} codim {args.codim}", betti, input_sha256=digest)
    low = r - args.codim - 1
    rep.oracles.append(OracleRow.compare(f"vanishing below degree {low}", [0] * low, betti[:low]))
    rep.oracles.append(OracleRow.compare("Euler characteristic (cells vs Betti)", _cell_euler(poset), _betti_euler(betti, False)))
    return rep


def _parse_poly(text: str, rank: int | None):
    try:
        return parse_polynomial(text, rank)
    except ValueError as exc:
        raise InputError(f"polynomial: {exc}") from None


def cmd_hypersurface(args) -> VerificationReport:
    f = _parse_poly(args.poly, args.rank)
    try:
        fan = tropical_hypersurface_fan(f)
    except ValueError as exc:
        raise InputError(f"polynomial: {exc}") from None
    rep = VerificationReport("hypersurface", str(f), [], input_sha256=sha256_bytes(args.poly.encode()))
    rep.betti = _fan_link_betti(fan, rep)
    k = args.grid
    mismatches = [
        w for w in product(range(-k, k + 1), repeat=f.nvars) if in_tropical_hypersurface(f, w) != support_contains(fan, w)
    ]
    rep.details["grid"] = f"[-{k},{k}]^{f.nvars}"
    rep.oracles.append(OracleRow.compare("initial form vs fan support on grid (mismatches)", 0, len(mismatches)))
    return rep


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise InputError(f"{what}: expected comma-separated integers, got {text!r}") from None


def cmd_initial(args) -> str:
    f = _parse_poly(args.poly, args.rank)
    w = _parse_ints(args.w, "--w")
    try:
        g = initial_form(f, w)
    except ValueError as exc:
        raise InputError(f"--w: {exc}") from None
    if args.json:
        return json.dumps({"initial_form": str(g), "polynomial": str(f), "w": w, "in_hypersurface": len(g) >= 2}, sort_keys=True)
    return str(g)


def cmd_weightrow(args) -> VerificationReport:
    s, digest = _parse(args.strata, StratificationIncidence.from_json)
    try:
        row = weight_row_complex(s)
    except IncidenceError as exc:
        raise InputError(f"{args.strata}: {exc}") from None
    h = homology_of_chain_complex(row)
    k = dual_complex(s)
    betti = reduced_betti(k)
    rep = VerificationReport("weightrow", args.strata, betti, input_sha256=digest, require_top_concentration=False)
    rep.details["pieces per level"] = list(row.ranks)
    dual = [reduced_betti_minus_one(k)] + betti
    for deg, (got, want) in enumerate(zip(h, dual)):
        rep.oracles.append(OracleRow.compare(f"H_{deg} of weight row vs dual complex b~_{deg - 1}", want, got))
    return rep


def _parse_mult(text: str) -> dict[int, int]:
    out = {}
    for item in text.split(","):
        if not item.strip():
            continue
        cell, _, k = item.partition(":")
        try:
            out[int(cell)] = int(k)
        except ValueError:
            raise InputError(f'--mult: expected "cell:k,...", got {item!r}') from None
    return out


def cmd_hatlink(args) -> VerificationReport:
    fan, digest = _parse(args.fan, Fan.from_json)
    poset = link_poset(fan)
    mult = _parse_mult(args.mult)
    try:
        hat = hat_link(poset, mult)
    except ValueError as exc:
        raise InputError(f"--mult: {exc}") from None
    base = reduced_betti(order_complex(poset))
    betti = reduced_betti(order_complex(hat))
    expected = list(base)
    for cell, k in mult.items():
        expected[poset.dims[cell]] += k - 1
    rep = VerificationReport("hatlink", args.fan, betti, input_sha256=digest)
    rep.details["link Betti"] = base
    rep.details["multiplicities"] = {str(c): k for c, k in sorted(mult.items())}
    rep.oracles.append(OracleRow.compare("Betti below top unchanged", base[:-1], betti[:-1]))
    rep.oracles.append(OracleRow.compare("each extra copy adds one cycle", expected, betti))
    return rep


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="canonical JSON report")
    fmt.add_argument("--md", action="store_true", help="markdown summary (default)")

    p = argparse.ArgumentParser(prog="troplink", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("link", parents=[common], help="homology of the link of a fan")
    s.add_argument("fan")
    s.add_argument("--geometric", action="store_true", help="full geometric validation")
    s.set_defaults(run=cmd_link)

    s = sub.add_parser("bergman", parents=[common], help="Bergman fan of a matroid vs the Moebius oracle")
    s.add_argument("matroid")
    s.set_defaults(run=cmd_bergman)

    s = sub.add_parser("trees", parents=[common], help="link of the space of phylogenetic trees")
    s.add_argument("n", type=int)
    s.set_defaults(run=cmd_trees)

    s = sub.add_parser("skeleton", parents=[common], help="codimension-c skeleton of a complete fan")
    s.add_argument("fan")
    s.add_argument("--codim", type=int, required=True)
    s.set_defaults(run=cmd_skeleton)

    s = sub.add_parser("hypersurface", parents=[common], help="tropical hypersurface of a Laurent polynomial")
    s.add_argument("poly")
    s.add_argument("--rank", type=int, default=None, help="number of variables (default: largest index used)")
    s.add_argument("--grid", type=int, default=2, help="membership cross-check on [-k,k]^rank")
    s.set_defaults(run=cmd_hypersurface)

    s = sub.add_parser("initial", parents=[common], help="initial form of a polynomial (use --w=-1,-1 for negatives)")
    s.add_argument("poly")
    s.add_argument("--w", required=True, help="weight vector a,b,...")
    s.add_argument("--rank", type=int, default=None)
    s.set_defaults(run=cmd_initial)

    s = sub.add_parser("weightrow", parents=[common], help="top weight row vs the dual complex")
    s.add_argument("strata")
    s.set_defaults(run=cmd_weightrow)

    s = sub.add_parser("hatlink", parents=[common], help="link with top cells repeated by multiplicity")
    s.add_argument("fan")
    s.add_argument("--mult", default="", help='cone indices with multiplicities, "cell:k,..."')
    s.set_defaults(run=cmd_hatlink)

    s = sub.add_parser("fixtures", help="write the built-in example inputs")
    s.add_argument("outdir")
    s.set_defaults(run=None)
    return p


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get("TROPLINK_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr, format="%(levelname)s %(message)s")
    args = _build_parser().parse_args(argv)

    if args.command == "fixtures":
        paths = write_fixtures(args.outdir)
        for path in paths:
            print(path)
        return 0

    start = time.perf_counter()
    try:
        result = args.run(args)
    except InputError as exc:
        print(f"troplink: error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, str):
        print(result)
        return 0
    result.timing_s = time.perf_counter() - start
    log.info("%s finished in %.3f s", args.command, result.timing_s)
    print(result.to_json() if args.json else result.to_markdown())
    return 0 if result.passed else 1


if __name__ == "__main__":
    sys.exit(main())
