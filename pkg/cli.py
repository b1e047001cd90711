import argparse
import json
import logging
import pathlib
import sys
from typing import Dict, List

from config import Config
from deformation import hull_quadrics, quadratic_dimension_bound, special_locus_report
from errors import ParseError, PhantomError
from hom import is_generic, parse_object, hom
from interp import FatPointProblem, case_list, cross_check, interp_dim, verify_generality
from lattice import cremona_reduce, euler_char, intersect, parse_divisor, reflection_r
from logger import init_logging
from objects import BundleName, CaseList, OutputFormat
from projection import ExceptionalCollection, curve_report, e1_page, e1_page_right_adjoint, \
    generator_negative_report, negative_hom_check, numclass_of, project_numclass, skyscraper_report
from report import render, run_bundle, write
from systems import SPLIT_BOXES, ample_slope_check, decide, enumerate_split_cases, homogeneous_split, \
    orbit_divisor_argument, parse_box, point_split, refute_split


def parse_multiplicities(text: str) -> List[int]:
    """"18x10", "4,2x9" or "1,1,0,0,0,0,0,0,0,0"."""
    m = list()
    for part in text.split(","):
        value, sep, count = part.strip().partition("x")
        try:
            m.extend([int(value)] * (int(count) if sep else 1))
        except ValueError:
            raise ParseError(f"Invalid multiplicity list {text!r}")
    return m


def _lattice(args, config: Config) -> Dict:
    d = parse_divisor(args.divisor)
    if args.action == "intersect" and args.other is None:
        raise ParseError("lattice intersect needs two classes")
    if args.action == "chi":
        return {"class": str(d), "chi": euler_char(d)}
    if args.action == "intersect":
        other = parse_divisor(args.other)
        return {"a": str(d), "b": str(other), "intersection": intersect(d, other)}
    if args.action == "reflect":
        return {"class": str(d), "reflection": str(reflection_r(d)), "array": reflection_r(d).to_json()}
    reduced, log = cremona_reduce(d)
    return {"class": str(d), "reduced": str(reduced), "log": [entry.to_dict() for entry in log]}


def _constraint_for(total, box_text: str | None, homogeneous: bool):
    if homogeneous:
        return homogeneous_split(total)
    if box_text is not None:
        return point_split(total, *parse_box(box_text))
    return point_split(total)


def _systems(args, config: Config) -> Dict:
    if args.action == "ample":
        return ample_slope_check().to_dict()
    if args.divisor is None or (args.action == "orbit" and args.total is None):
        raise ParseError(f"systems {args.action}: missing class argument")
    if args.action == "decide":
        d = parse_divisor(args.divisor)
        return {"class": str(d), **decide(d).to_dict()}
    if args.action == "orbit":
        return orbit_divisor_argument(parse_divisor(args.divisor), parse_divisor(args.total)).to_dict()
    total = parse_divisor(args.divisor)
    constraint = _constraint_for(total, args.box, args.homogeneous)
    cases = enumerate_split_cases(total, constraint, workers=config.split_workers)
    payload = {"total": str(total), "cases": [list(c) for c in cases]}
    if args.refute:
        payload["refutations"] = [refute_split(total, c).to_dict() for c in cases]
    return payload


def _hom(args, config: Config) -> Dict:
    a, b = parse_object(args.source), parse_object(args.target)
    return {"source": str(a), "target": str(b), "hom": hom(a, b).to_dict(), "generic": is_generic(a, b)}


def _project(args, config: Config) -> Dict:
    coll = ExceptionalCollection.default()
    if args.action == "dims":
        if args.case == "curve":
            return curve_report(args.n or config.curve_n, coll).to_dict()
        return skyscraper_report(args.case == "skyscraper-same", coll).to_dict()
    if args.action == "negative" and args.source is None:
        reports = generator_negative_report(args.line_class)
        return {"pairs": [r.to_dict() for r in reports], "certified": all(r.certified for r in reports)}
    if args.source is None or (args.action != "class" and args.target is None):
        raise ParseError(f"project {args.action} needs --from and --to objects")
    if args.action == "negative":
        return negative_hom_check(parse_object(args.source), parse_object(args.target), coll).to_dict()
    if args.action == "class":
        obj = parse_object(args.source)
        return {"object": str(obj), "class": numclass_of(obj).to_dict(),
                "projected": project_numclass(numclass_of(obj), coll).to_dict()}
    a, b = parse_object(args.source), parse_object(args.target)
    if args.action == "e1-right":
        return e1_page_right_adjoint(a, b, coll, config.progress).to_dict()
    return e1_page(a, b, coll, config.progress).to_dict()


def _hull(args, config: Config) -> Dict:
    if args.action == "quadrics":
        return hull_quadrics().to_dict()
    return quadratic_dimension_bound().to_dict()


def _special_locus(args, config: Config) -> Dict:
    return special_locus_report().to_dict()


def _interp(args, config: Config) -> Dict:
    if args.action == "verify-generality":
        classes = case_list(CaseList.from_str(args.list) if args.list else config.case_list)
        return verify_generality(classes, prime=config.prime, seed=config.seed, workers=config.workers,
                                 max_retries=config.max_point_retries, progress=config.progress).to_dict()
    if args.d is None or args.m is None:
        raise ParseError("interp needs --d and --m")
    problem = FatPointProblem(d=args.d, m=tuple(parse_multiplicities(args.m)), prime=config.prime, seed=config.seed)
    if args.cross_check:
        return cross_check(problem, (config.prime, config.cross_check_prime), config.max_point_retries).to_dict()
    return interp_dim(problem, config.max_point_retries, config.progress).to_dict()


_COMMANDS = {
    "lattice": _lattice,
    "systems": _systems,
    "hom": _hom,
    "project": _project,
    "hull": _hull,
    "special-locus": _special_locus,
    "interp": _interp,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="phantom", description="Exact computations on the blowup at ten points.")
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--prime", type=int)
    parser.add_argument("--workers", type=int)
    parser.add_argument("--progress", action="store_true", default=None)
    parser.add_argument("--format", choices=OutputFormat.names(), dest="output_format")
    parser.add_argument("--json", action="store_const", const=OutputFormat.JSON.value, dest="output_format")
    parser.add_argument("--table", action="store_const", const=OutputFormat.Table.value, dest="output_format")
    parser.add_argument("--output", help="write the report to this file or directory")
    parser.add_argument("--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice")
    p.add_argument("action", choices=["chi", "intersect", "reflect", "cremona"])
    p.add_argument("divisor")
    p.add_argument("other", nargs="?")

    p = sub.add_parser("systems")
    p.add_argument("action", choices=["decide", "enumerate", "orbit", "ample"])
    p.add_argument("divisor", nargs="?")
    p.add_argument("total", nargs="?")
    p.add_argument("--box", help=f"e.g. d=0..14,m=0..9,mp=0..10 (defaults {SPLIT_BOXES})")
    p.add_argument("--homogeneous", action="store_true")
    p.add_argument("--refute", action="store_true")

    p = sub.add_parser("hom")
    p.add_argument("source")
    p.add_argument("target")

    p = sub.add_parser("project")
    p.add_argument("action", choices=["e1", "e1-right", "dims", "class", "negative"])
    p.add_argument("source", nargs="?")
    p.add_argument("--from", dest="source_opt")
    p.add_argument("--to", dest="target")
    p.add_argument("--case", choices=["skyscraper-same", "skyscraper-distinct", "curve"], default="skyscraper-same")
    p.add_argument("--n", type=int)
    p.add_argument("--line-class", action="store_true", help="use H instead of F in the generator list")

    p = sub.add_parser("hull")
    p.add_argument("action", choices=["quadrics", "rank"])

    sub.add_parser("special-locus")

    p = sub.add_parser("interp")
    p.add_argument("action", nargs="?", choices=["verify-generality"])
    p.add_argument("--d", type=int)
    p.add_argument("--m", help="multiplicities, e.g. 18x10")
    p.add_argument("--list", choices=[c.value for c in CaseList])
    p.add_argument("--cross-check", action="store_true")

    p = sub.add_parser("report")
    p.add_argument("bundle", choices=[b.value for b in BundleName])
    p.add_argument("--n", type=int)
    p.add_argument("--list", choices=[c.value for c in CaseList])
    return parser


def _config(args) -> Config:
    config = Config.from_file(args.config) if args.config else Config()
    return config.override(seed=args.seed, prime=args.prime, workers=args.workers, progress=args.progress,
                           output_format=args.output_format, curve_n=getattr(args, "n", None),
                           case_list=getattr(args, "list", None),
                           log_level="DEBUG" if args.verbose else None)


def _emit(payload: Dict, name: str, config: Config, output: str | None):
    text = render(payload, config.output_format)
    if output is None:
        print(text)
        return
    path = pathlib.Path(output)
    if path.is_dir():
        path = path / f"{name}.{config.output_format.encode()}"
    write(payload, path, config.output_format)
    logging.info(f"report written to {path}")


def main(argv: List[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _config(args)
    except ValueError as e:
        print(json.dumps({"error": "ValueError", "message": str(e)}))
        return 2
    init_logging(config.log_level, config.log_file)
    if args.command == "project" and args.source is None:
        args.source = args.source_opt
    try:
        if args.command == "report":
            bundle = run_bundle(args.bundle, config)
            _emit(bundle.to_dict(), args.bundle, config, args.output or config.output_path)
            return 0 if bundle.passed else 1
        payload = _COMMANDS[args.command](args, config)
    except (PhantomError, ValueError) as e:
        logging.error(f"{args.command} failed: {e}")
        print(json.dumps({"error": type(e).__name__, "message": str(e)}))
        return 2
    _emit(payload, args.command, config, args.output or config.output_path)
    return 0


if __name__ == '__main__':
    sys.exit(main())
