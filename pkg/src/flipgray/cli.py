"""Command line front end.

Exit status: 0 for any decided answer (yes or no), 1 when a checked
certificate or reduction fails, 2 for usage or input errors, 3 when the
search budget runs out.
"""
from __future__ import annotations

import argparse
import itertools
import random
import re
import sys

from .errors import GrayCodeError, ResourceLimit
from .fileio import (format_instance, read_certificate, read_instance,
                     write_certificate, write_instance)
from .flipgraph import build_flip_graph
from .objects import BitString, Instance, Permutation
from .reductions import REDUCTIONS, reduce_instance
from .solver import (DEFAULT_BUDGET, count_hamilton_paths, has_hamilton_cycle,
                     has_hamilton_path, solve_debruijn_subset,
                     solve_shorthand_ucycle, verify_certificate)
from .verify import check_reduction, random_continuous_tuples, verify_reduction


def example_instance(name: str, *, flip=None, seed=0) -> Instance:
    """Named demo instances: abstract-no, abstract-yes, full-B<n>, full-S<n>, grid-sample."""
    if name == "abstract-no":
        objs = [BitString.from_str(s) for s in ("000", "001", "010", "100")]
        return Instance("bitstring", flip or "bitflip", tuple(objs), 3)
    if name == "abstract-yes":
        objs = [Permutation.from_str(s) for s in ("1234", "1324", "1243")]
        return Instance("permutation", flip or "swap", tuple(objs), 4)
    if name == "grid-sample":
        return random_continuous_tuples(8, random.Random(seed))
    match = re.fullmatch(r"full-([BS])(\d+)", name)
    if match:
        n = int(match.group(2))
        if match.group(1) == "B":
            objs = [BitString(b) for b in itertools.product((0, 1), repeat=n)]
            return Instance("bitstring", flip or "bitflip", tuple(objs), n)
        objs = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
        return Instance("permutation", flip or "swap", tuple(objs), n)
    raise GrayCodeError(f"unknown example {name!r}")


def _emit(*lines):
    for line in lines:
        print(line)


def _stats_lines(stats):
    return [f"{k}={v}" for k, v in stats.items()]


def cmd_solve(args, cyclic=False):
    inst = read_instance(args.inp, flip=args.flip)
    graph = build_flip_graph(inst)
    solve = has_hamilton_cycle if (cyclic or args.cyclic) else has_hamilton_path
    try:
        res = solve(graph, budget=args.budget, threads=args.threads)
    except ResourceLimit as exc:
        _emit("answer=unknown", *_stats_lines(exc.stats))
        return 3
    _emit(f"answer={res.answer}")
    if res.yes:
        if args.out:
            write_certificate(res.certificate, args.out)
        _emit(f"certificate={res.certificate}")
    _emit(*_stats_lines(res.stats))
    return 0


def cmd_count(args):
    inst = read_instance(args.inp, flip=args.flip)
    _emit(f"count={count_hamilton_paths(build_flip_graph(inst), bound=args.bound)}")
    return 0


def cmd_verify(args):
    inst = read_instance(args.inp, flip=args.flip)
    ok = verify_certificate(inst, read_certificate(args.cert), cyclic=args.cyclic)
    _emit(f"valid={int(ok)}")
    return 0 if ok else 1


def cmd_reduce(args):
    src = read_instance(args.inp)
    tgt = reduce_instance(src, args.tag, target_flip=args.flip)
    if args.out:
        write_instance(tgt, args.out)
    else:
        sys.stdout.write(format_instance(tgt))
    report = check_reduction(args.tag, src, target_flip=tgt.flip)
    _emit(*report.lines())
    return 0 if report.passed else 1


def cmd_verify_reduction(args):
    if args.inp:
        report = check_reduction(args.tag, read_instance(args.inp))
    else:
        report = verify_reduction(args.tag, args.n, samples=args.samples, seed=args.seed)
    _emit(*report.lines())
    return 0 if report.passed else 1


def cmd_ucycle(args):
    inst = read_instance(args.inp)
    if inst.kind == "bitstring":
        res = solve_debruijn_subset(inst.objects, cyclic=args.cyclic)
    elif inst.kind == "permutation":
        res = solve_shorthand_ucycle(inst.objects, cyclic=args.cyclic)
    else:
        raise GrayCodeError(f"ucycle needs bitstrings or permutations, got {inst.kind}")
    _emit(f"answer={res.answer}", f"cyclic={int(res.cyclic)}")
    if res.yes:
        _emit(f"sequence={res.text}", f"length={len(res.sequence)}")
    return 0


def cmd_gen(args):
    inst = example_instance(args.name, flip=args.flip, seed=args.seed)
    if args.out:
        write_instance(inst, args.out)
    else:
        sys.stdout.write(format_instance(inst))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="flipgray", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, *, out=True):
        sp.add_argument("--in", dest="inp", required=True)
        if out:
            sp.add_argument("--out")
        sp.add_argument("--flip", default=None)

    for verb in ("solve", "cycle"):
        sp = sub.add_parser(verb)
        common(sp)
        sp.add_argument("--cyclic", action="store_true")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        sp.add_argument("--threads", type=int, default=1)

    sp = sub.add_parser("count")
    common(sp, out=False)
    sp.add_argument("--bound", type=int, default=10)

    sp = sub.add_parser("verify")
    common(sp, out=False)
    sp.add_argument("--cert", required=True)
    sp.add_argument("--cyclic", action="store_true")

    sp = sub.add_parser("reduce")
    common(sp)
    sp.add_argument("--tag", required=True, choices=sorted(REDUCTIONS))

    sp = sub.add_parser("verify-reduction")
    sp.add_argument("--tag", required=True, choices=sorted(REDUCTIONS))
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--in", dest="inp")
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("ucycle")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--cyclic", action="store_true")

    sp = sub.add_parser("gen")
    sp.add_argument("name")
    sp.add_argument("--out")
    sp.add_argument("--flip", default=None)
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    handlers = {
        "solve": cmd_solve,
        "cycle": lambda a: cmd_solve(a, cyclic=True),
        "count": cmd_count,
        "verify": cmd_verify,
        "reduce": cmd_reduce,
        "verify-reduction": cmd_verify_reduction,
        "ucycle": cmd_ucycle,
        "gen": cmd_gen,
    }
    try:
        return handlers[args.verb](args)
    except (GrayCodeError, OSError) as exc:
        print(f"error={type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
