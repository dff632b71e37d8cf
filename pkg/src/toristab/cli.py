"""Command line front end.

    toristab classify   --matrix a,b,c,d
    toristab degrees    --matrix a,b,c,d [--horizon N]
    toristab check-as   --matrix a,b,c,d [--fan FAN]
    toristab stabilize  --matrix a,b,c,d [--fan FAN] [--max-index K]
    toristab fan-info   --fan FAN
    toristab render     --fan FAN --svg PATH [--matrix a,b,c,d]

A FAN is ``p2``, ``p1xp1``, ``hirzebruch:A`` or a path to a fan-v1
JSON file.  Exit status: 0 on success (a NotAS verdict is a successful
analysis), 1 when stabilization is impossible, 2 on invalid input.
"""

import argparse
import sys
import time

from . import __version__
from .dynamics import (ORBIT_IMAGE_CONVENTION, ROW_CONVENTION, MonomialMap,
                       check_as, degree_sequence)
from .errors import ToristabError
from .exact import eigen_decompose
from .fan import (fan_from_json, fan_to_dict, hirzebruch, is_regular,
                  standard_p1xp1, standard_p2)
from .serialization import (asreport_to_dict, classification_to_dict,
                            degrees_to_dict, dumps, outcome_to_dict,
                            rat_to_dict)
from .stabilizer import (Impossible, StabilizeConfig, Stabilized, classify,
                         stabilize)
from .svg import annotations_for, render_svg

RUN_FORMAT = "toristab-run-v1"
EXIT_OK, EXIT_IMPOSSIBLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_matrix(text: str, transpose: bool = False) -> MonomialMap:
    try:
        a, b, c, d = (int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"--matrix expects four integers a,b,c,d, got {text!r}")
    if transpose:
        b, c = c, b
    return MonomialMap(a, b, c, d)


def parse_fan(arg: str):
    if arg == "p2":
        return standard_p2()
    if arg == "p1xp1":
        return standard_p1xp1()
    if arg.startswith("hirzebruch:"):
        try:
            return hirzebruch(int(arg.split(":", 1)[1]))
        except ValueError:
            raise UsageError(f"bad Hirzebruch parameter in {arg!r}")
    try:
        with open(arg) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read fan file {arg!r}: {exc}")
    try:
        return fan_from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed fan file {arg!r}: {exc}")


def _spectral_dict(A):
    sd = eigen_decompose(A)
    return {"trace": sd.trace, "det": sd.det, "disc": sd.disc,
            "eigen_kind": sd.eigen_kind.value,
            "rho1_sq_minus_e_sign": sd.rho1_sq_minus_e_sign,
            "cos_two_pi_theta": None if sd.cos_two_pi_theta is None
            else rat_to_dict(sd.cos_two_pi_theta)}


def _fan_info(fan):
    dets = is_regular(fan)
    return {"fan": fan_to_dict(fan),
            "cone_dets": [d for _, d in dets],
            "regular": all(d == 1 for _, d in dets),
            "symmetric": fan.is_symmetric()}


def _build_parser():
    p = argparse.ArgumentParser(prog="toristab", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"toristab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, matrix=True, fan=False):
        sp.add_argument("--matrix", required=matrix, help="row-major entries a,b,c,d")
        sp.add_argument("--transpose", action="store_true",
                        help="read the matrix transposed")
        if fan:
            sp.add_argument("--fan", default="p2", help="p2, p1xp1, hirzebruch:A or a fan-v1 file")
        sp.add_argument("--out", choices=("json", "text"), default="json")
        sp.add_argument("--svg", help="also write an SVG figure to this path")

    common(sub.add_parser("classify", help="spectral classification"))
    sp = sub.add_parser("degrees", help="degree sequence on P^2")
    common(sp)
    sp.add_argument("--horizon", type=int, default=10)
    common(sub.add_parser("check-as", help="decide algebraic stability on a fan"), fan=True)
    sp = sub.add_parser("stabilize", help="refine the fan until the map is AS")
    common(sp, fan=True)
    sp.add_argument("--max-index", type=int, default=64,
                    help="largest sublattice index searched for regularization")
    common(sub.add_parser("fan-info", help="regularity data of a fan"), matrix=False, fan=True)
    common(sub.add_parser("render", help="write an SVG figure of a fan"), matrix=False, fan=True)
    return p


def _run(args):
    """Returns (exit code, result payload, text summary, fan to draw, matrix)."""
    A = parse_matrix(args.matrix, args.transpose) if args.matrix else None
    fan = parse_fan(args.fan) if hasattr(args, "fan") else None

    if args.command == "classify":
        cls = classify(A)
        result = {"classification": classification_to_dict(cls),
                  "spectral": _spectral_dict(A)}
        text = f"{cls.kind.value}"
        if cls.cos_two_pi_theta is not None:
            text += f"  cos(2 pi theta) = {cls.cos_two_pi_theta}"
        if cls.order is not None:
            text += f"  ray-action order {cls.order}"
        return EXIT_OK, result, text, None, A

    if args.command == "degrees":
        rep = degree_sequence(A, args.horizon)
        text = (f"degrees {list(rep.degrees)}  lambda1 ~ {float(rep.lambda1):.6f}  "
                f"e = {rep.topological_degree}")
        return EXIT_OK, degrees_to_dict(rep), text, None, A

    if args.command == "check-as":
        rep = check_as(A, fan)
        text = rep.verdict.value
        if rep.witness:
            w = rep.witness
            text += f"  witness ray ({w.ray.x},{w.ray.y}) hits cone {w.cone} at step {w.k}"
        return EXIT_OK, asreport_to_dict(rep), text, fan, A

    if args.command == "stabilize":
        out = stabilize(A, fan, StabilizeConfig(max_sublattice_index=args.max_index))
        doc = outcome_to_dict(out)
        text = type(out).__name__
        if isinstance(out, Impossible):
            text += (f"  disc = {out.certificate.disc}  "
                     f"cos(2 pi theta) = {out.certificate.cos_two_pi_theta}")
            return EXIT_IMPOSSIBLE, doc, text, None, A
        text += f"  {len(out.fan)} rays  regular = {out.regular}"
        if out.sublattice is not None:
            text += f"  sublattice {out.sublattice.b1},{out.sublattice.b2} (degree {out.cover_degree})"
        if isinstance(out, Stabilized):
            text += f"  verdict {out.as_report.verdict.value}"
        return EXIT_OK, doc, text, out.fan, A

    if args.command == "fan-info":
        info = _fan_info(fan)
        text = (f"{len(fan)} rays  regular = {info['regular']}  "
                f"cone dets {info['cone_dets']}")
        return EXIT_OK, info, text, fan, A

    if args.command == "render":
        if not args.svg:
            raise UsageError("render needs --svg PATH")
        return EXIT_OK, _fan_info(fan), f"wrote {args.svg}", fan, A

    raise UsageError(f"unknown command {args.command}")  # pragma: no cover


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    t0 = time.perf_counter_ns()
    try:
        code, result, text, fan, A = _run(args)
    except (UsageError, ToristabError, ValueError) as exc:
        print(f"toristab: error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.svg and fan is not None:
        ann = annotations_for(A, fan, title=f"{A!r}") if A is not None else None
        with open(args.svg, "w") as fh:
            fh.write(render_svg(fan, ann))
    if args.out == "text":
        print(text, file=stdout)
        return code
    report = {
        "format": RUN_FORMAT,
        "command": args.command,
        "argv": list(argv) if argv is not None else sys.argv[1:],
        "matrix": None if A is None else [[A.a, A.b], [A.c, A.d]],
        "result": result,
        "elapsed_us": (time.perf_counter_ns() - t0) // 1000,
        "version": __version__,
        "conventions": {"row": ROW_CONVENTION, "orbit_image": ORBIT_IMAGE_CONVENTION,
                        "transposed_input": bool(args.transpose)},
    }
    print(dumps(report), file=stdout)
    return code


def main():  # pragma: no cover
    sys.exit(run())


__all__ = ["run", "main", "parse_matrix", "parse_fan"]
