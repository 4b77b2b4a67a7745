#!/usr/bin/env python

# Copyright (c) 2018, DIANA-HEP
# All rights reserved.
# 
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
# 
# * Redistributions of source code must retain the above copyright notice, this
#   list of conditions and the following disclaimer.
# 
# * Redistributions in binary form must reproduce the above copyright notice,
#   this list of conditions and the following disclaimer in the documentation
#   and/or other materials provided with the distribution.
# 
# * Neither the name of the copyright holder nor the names of its
#   contributors may be used to endorse or promote products derived from
#   this software without specific prior written permission.
# 
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
# FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
# DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
# OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.

import argparse
import json
import logging
import os
import sys

from degenga.algebra import AlgebraError, NotInvertible, Signature, inverse
from degenga.expr import blade_name, parse
from degenga.groups import GroupId, counterexample_check, member
from degenga.matrixrep import EXAMPLES, structural_check
from degenga.verify import Record, VerificationConfig, all_signatures, atlas_row, run_suites

logger = logging.getLogger(__name__)

ENVIRONMENT_PREFIX = "DEGENGA_"

# options that fall back to DEGENGA_<NAME> when not given on the command line
_ENVIRONMENT = {"sig": str, "max_n": int, "group": str, "samples": int, "seed": int, "coeff_bound": int, "format": str, "suite": str, "complex": bool, "timing": bool}

def _flag(text):
    return text.strip().lower() in ("1", "true", "yes", "on")

def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sig", action="append", metavar="p,q,r", help="signature (repeatable); DEGENGA_SIG may list several separated by spaces")
    common.add_argument("--max-n", type=int, metavar="K", help="run over every signature with 1 <= p + q + r <= K")
    common.add_argument("--group", metavar="NAME", help="group name, such as P_pm, P_Lambda, Gamma_(1), Gamma_check_0n or G_units")
    common.add_argument("--samples", type=int, metavar="N", help="sampled elements per check (default 200)")
    common.add_argument("--seed", type=int, metavar="S", help="random seed (default 42)")
    common.add_argument("--coeff-bound", type=int, metavar="B", help="sampled coefficients lie in [-B, B] (default 5)")
    common.add_argument("--format", choices=("human", "jsonl"), help="output format (default human)")
    common.add_argument("--complex", action="store_true", default=None, help="Gaussian rational scalars")
    common.add_argument("--suite", choices=("lemmas", "theorems", "lie", "matrix", "all"), help="verification suite (default all)")
    common.add_argument("--timing", action="store_true", default=None, help="include wall-clock seconds in verification records")
    common.add_argument("-v", "--verbose", action="count", default=0, help="log progress to stderr (repeat for more detail)")

    parser = argparse.ArgumentParser(prog="degenga", description="Exact computations with Lie groups in degenerate geometric algebras G(p,q,r).")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    p = commands.add_parser("eval", parents=[common], help="evaluate and print a multivector expression")
    p.add_argument("expression")
    unary = p.add_mutually_exclusive_group()
    unary.add_argument("--hat", action="store_true", help="apply the grade involution")
    unary.add_argument("--inv", action="store_true", help="invert")
    unary.add_argument("--grade", type=int, metavar="K", help="project onto grade K")
    unary.add_argument("--even", action="store_true", help="even part")
    unary.add_argument("--odd", action="store_true", help="odd part")

    p = commands.add_parser("member", parents=[common], help="test membership of an element in a group")
    p.add_argument("expression")

    commands.add_parser("verify", parents=[common], help="run the verification suites")

    p = commands.add_parser("atlas", parents=[common], help="write one json-lines record of group coincidences per signature")
    p.add_argument("-o", "--output", default="-", metavar="PATH", help="output file, or - for standard output (default)")

    p = commands.add_parser("matrix", parents=[common], help="run the structural checks of the matrix examples")
    p.add_argument("examples", nargs="*", metavar="example", help="any of {0} (default all)".format(", ".join(sorted(EXAMPLES))))

    commands.add_parser("counterexample", parents=[common], help="reproduce the single-grade preservation counterexample")
    return parser

def _apply_environment(args, environ):
    for name, kind in _ENVIRONMENT.items():
        if getattr(args, name, None) is not None:
            continue
        text = environ.get(ENVIRONMENT_PREFIX + name.upper())
        if text is None or text.strip() == "":
            continue
        if kind is bool:
            value = _flag(text)
        elif name == "sig":
            value = text.split()
        else:
            try:
                value = kind(text)
            except ValueError:
                raise AlgebraError("environment variable {0}{1} is not a valid {2}: {3}".format(ENVIRONMENT_PREFIX, name.upper(), kind.__name__, repr(text)))
        if name == "format" and value not in ("human", "jsonl"):
            raise AlgebraError("environment variable {0}FORMAT must be human or jsonl, not {1}".format(ENVIRONMENT_PREFIX, repr(text)))
        setattr(args, name, value)

def _configure_logging(verbose, environ):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    name = environ.get(ENVIRONMENT_PREFIX + "LOG_LEVEL")
    if verbose == 0 and name is not None and isinstance(logging.getLevelName(name.upper()), int):
        level = logging.getLevelName(name.upper())
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

def _signatures(args, default=None):
    if args.sig is not None:
        return [Signature.parse(x, complex=bool(args.complex)) for x in args.sig]
    if default is not None:
        return [Signature(default.p, default.q, default.r, complex=bool(args.complex))]
    raise AlgebraError("a signature is required: --sig p,q,r")

def _config(args, signatures=None):
    return VerificationConfig(signatures=signatures,
                              max_n=args.max_n,
                              samples=200 if args.samples is None else args.samples,
                              seed=42 if args.seed is None else args.seed,
                              coeff_bound=5 if args.coeff_bound is None else args.coeff_bound,
                              suites=args.suite or "all",
                              format=args.format or "human",
                              complex=bool(args.complex),
                              timing=bool(args.timing))

def _emit(out, args, record, human):
    if (args.format or "human") == "jsonl":
        out.write(json.dumps(record, sort_keys=True) + "\n")
    else:
        out.write(human + "\n")

################################################################ commands

def cmd_eval(args, out):
    sig = _signatures(args)[0]
    u = parse(args.expression, sig)
    if args.hat:
        result = u.hat()
    elif args.inv:
        result = inverse(u)
    elif args.grade is not None:
        result = u.grade(args.grade)
    elif args.even:
        result = u.even()
    elif args.odd:
        result = u.odd()
    else:
        result = u
    text = "not invertible" if result is NotInvertible else str(result)
    _emit(out, args, {"signature": str(sig), "expression": args.expression, "result": text}, text)
    return 0

def cmd_member(args, out):
    sig = _signatures(args)[0]
    if args.group is None:
        raise AlgebraError("a group is required: --group NAME")
    group = GroupId.parse(args.group, sig)
    report = member(group, parse(args.expression, sig))
    human = "{0} is {1} of {2} in {3}".format(report.element, "a member" if report.member else "not a member", group, sig)
    if report.witness is not None:
        human += "\nwitness: {0}".format(report.witness)
    if report.blade is not None:
        human += "\nfirst violating blade: {0}".format(blade_name(report.blade, sig.n))
    _emit(out, args, report.todict(), human)
    return 0 if report.member else 1

def cmd_verify(args, out):
    signatures = None if args.sig is None else _signatures(args)
    config = _config(args, signatures)
    records = run_suites(config)
    for record in records:
        _emit(out, args, record.todict(), record.tohuman())
    failed = sum(1 for x in records if not x.passed)
    if config.format == "human":
        out.write("{0} claims checked, {1} failed\n".format(len(records), failed))
    return 1 if failed > 0 else 0

def cmd_atlas(args, out):
    if args.sig is not None:
        signatures = _signatures(args)
    else:
        signatures = all_signatures(4 if args.max_n is None else args.max_n, bool(args.complex))
    samples = 200 if args.samples is None else args.samples
    seed = 42 if args.seed is None else args.seed
    bound = 5 if args.coeff_bound is None else args.coeff_bound

    rows = []
    for sig in signatures:
        rows.append(atlas_row(sig, samples, seed, bound))
        logger.info("atlas row %s: %s", sig, rows[-1]["coincidences"])
    text = "".join(json.dumps(row, sort_keys=True) + "\n" for row in rows)

    if args.output == "-":
        out.write(text)
    else:
        try:
            with open(args.output, "w") as file:
                file.write(text)
        except OSError as err:
            sys.stderr.write("degenga: cannot write atlas to {0}: {1}\n".format(args.output, err))
            return 2
    return 0 if all(row.get("matches_closed_form", True) for row in rows) else 1

def cmd_matrix(args, out):
    examples = args.examples or sorted(EXAMPLES)
    for example_id in examples:
        if example_id not in EXAMPLES:
            raise AlgebraError("unknown matrix example {0}; expected one of {1}".format(repr(example_id), ", ".join(sorted(EXAMPLES))))
    config = _config(args)
    failed = 0
    for example_id in examples:
        rng = config.rng("structure of " + example_id, EXAMPLES[example_id])
        report = structural_check(example_id, config.samples, rng, config.coeff_bound)
        for name, passed, witness in report.checks:
            record = Record("matrix", name, example_id, passed, None if witness is None or passed else str(witness))
            _emit(out, args, record.todict(), record.tohuman())
            failed += 0 if passed else 1
        for name in sorted(report.records):
            _emit(out, args, {"example": example_id, "record": name, "value": report.records[name]}, "      {0:<10} {1}: {2}".format(example_id, name, report.records[name]))
    return 1 if failed > 0 else 0

def cmd_counterexample(args, out):
    sig = _signatures(args, default=Signature(0, 0, 3))[0]
    report = counterexample_check(sig)
    for fact in report.facts:
        human = "{0}  e + e1 {1} {2}".format("REPRODUCED" if fact.reproduced else "DIFFERS   ", "in" if fact.member else "not in", fact.claim)
        if fact.blade is not None:
            human += ": {0} -> {1}".format(blade_name(fact.blade, sig.n), fact.image)
        _emit(out, args, fact.todict(sig.n), human)
    return 0 if report.reproduced else 1

COMMANDS = {"eval": cmd_eval, "member": cmd_member, "verify": cmd_verify, "atlas": cmd_atlas, "matrix": cmd_matrix, "counterexample": cmd_counterexample}

def main(argv=None, out=None, environ=None):
    """
    Command-line entry point; returns the exit code: 0 for success or membership, 1 for a failed claim or non-membership, 2 for usage, parse or i/o errors.
    """
    if out is None:
        out = sys.stdout
    if environ is None:
        environ = os.environ
    try:
        args = _parser().parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2

    _configure_logging(args.verbose, environ)
    try:
        _apply_environment(args, environ)
        return COMMANDS[args.command](args, out)
    except (AlgebraError, ValueError) as err:
        sys.stderr.write("degenga: error: {0}\n".format(err))
        return 2

def run():
    sys.exit(main())
