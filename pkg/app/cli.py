# filename: app/cli.py

"""
Command-line front end.

    python -m app.cli check FILE... [--json]
    python -m app.cli convert FILE (--to-2alg | --to-ainf) [-o OUT]
    python -m app.cli construct RECIPE FILE [-o OUT]
    python -m app.cli mc FILE [--json]
    python -m app.cli gen KIND [--algebra NAME] [--seed N] [-o DIR]
    python -m app.cli roundtrip FILE... [--json]

Exit status: 0 pass, 1 identity violation or failed precondition,
2 unreadable or ill-shaped input, 3 the three Maurer-Cartan verdicts disagree.
"""

import argparse
import logging
import sys

from app.core.config import DEFAULT_SEED, LOG_LEVEL, MAX_DIM
from app.flows import (
    create_check_flow,
    create_construct_flow,
    create_convert_flow,
    create_gen_flow,
    create_mc_flow,
    create_roundtrip_flow,
)
from nodes.construct_node import RECIPES
from nodes.generate_node import GEN_KINDS

logger = logging.getLogger(__name__)


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--json", action="store_true", help="machine-readable report")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for generated data")
    parser.add_argument("--max-dim", type=int, default=MAX_DIM, help="largest dimension accepted or produced")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diffalg", description="Exact checks and constructions for difference 2-algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run the identity checks of each file's kind")
    check.add_argument("paths", nargs="+")
    _common(check)

    convert = sub.add_parser("convert", help="2-term structure <-> difference 2-algebra")
    convert.add_argument("path")
    target = convert.add_mutually_exclusive_group(required=True)
    target.add_argument("--to-2alg", dest="target", action="store_const", const="2alg")
    target.add_argument("--to-ainf", dest="target", action="store_const", const="ainf")
    convert.add_argument("-o", "--output")
    _common(convert)

    construct = sub.add_parser("construct", help="build a structure from another one")
    construct.add_argument("recipe", choices=sorted(RECIPES))
    construct.add_argument("path")
    construct.add_argument("-o", "--output")
    _common(construct)

    mc = sub.add_parser("mc", help="difference identity, graph criterion and Maurer-Cartan equation")
    mc.add_argument("path")
    _common(mc)

    gen = sub.add_parser("gen", help="emit catalog instances")
    gen.add_argument("kind", choices=GEN_KINDS)
    gen.add_argument("--algebra", help="restrict to one catalog algebra")
    gen.add_argument("-o", "--output")
    _common(gen)

    roundtrip = sub.add_parser("roundtrip", help="apply every fitting correspondence and compare")
    roundtrip.add_argument("paths", nargs="+")
    _common(roundtrip)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=LOG_LEVEL)
    args = build_parser().parse_args(argv)
    shared = {"json": args.json, "seed": args.seed, "max_dim": args.max_dim, "emit": True}

    if args.command == "check":
        shared["paths"] = args.paths
        flow = create_check_flow()
    elif args.command == "convert":
        shared.update(path=args.path, target=args.target, output_path=args.output)
        flow = create_convert_flow()
    elif args.command == "construct":
        shared.update(path=args.path, recipe=args.recipe, output_path=args.output)
        flow = create_construct_flow()
    elif args.command == "mc":
        shared["path"] = args.path
        flow = create_mc_flow()
    elif args.command == "gen":
        shared.update(gen_kind=args.kind, algebra=args.algebra, output_path=args.output)
        flow = create_gen_flow()
    else:
        shared["paths"] = args.paths
        flow = create_roundtrip_flow()

    flow.run(shared)
    code = shared.get("exit_code", 0)
    logger.info(f"{args.command} finished with exit status {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
