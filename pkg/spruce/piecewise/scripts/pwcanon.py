"""Canonicalize, evaluate and compare piecewise functions.

Usage::

    pwcanon [--domain NAME] [--log-level LEVEL] [-v] COMMAND ...

    pwcanon canon [--pseudo] [--json] [FILE]
    pwcanon eval --at RAT [FILE]
    pwcanon equiv FILE1 FILE2
    pwcanon refine --points R1,R2,... [--json] [FILE]
    pwcanon bench --breakpoints N --reps R [--seed S] [--degree D]
                  [--probes P] [--jobs J] [--json]

Input files hold one expression in the piecewise expression language;
``-`` or an omitted file reads standard input.  The exit status is 0 on
success, 1 when ``equiv`` finds the functions different, and 2 on errors.

"""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

import argparse as _argparse
import json as _json
import logging as _logging
import os as _os
import sys as _sys

import spruce.piecewise as _pw


def main(argv=None):

    parser = _create_arg_parser()
    args = parser.parse_args(argv)

    loglevel = _logging.DEBUG if args.verbose else args.log_level
    _logging.basicConfig(level=loglevel,
                         format='%(name)s: %(levelname)s: %(message)s')

    try:
        return args.run(args)
    except (_pw.Error, OSError, ValueError) as exc:
        _logger.debug('{} failed'.format(args.command_name), exc_info=True)
        print('pwcanon: error: {}'.format(exc), file=_sys.stderr)
        return 2


def _create_arg_parser():

    parser = _argparse.ArgumentParser(
        prog='pwcanon',
        description='Canonicalize, evaluate and compare piecewise'
                     ' functions.')
    parser.add_argument('--domain',
                        default=_os.environ.get('PWCANON_DOMAIN',
                                                'polynomial'),
                        help='the effective domain of the pieces (default:'
                              ' $PWCANON_DOMAIN or %(default)s); one of '
                              + ', '.join(_pw.EffectiveDomain.impl_names()))
    parser.add_argument('--log-level',
                        default='WARNING',
                        choices=('DEBUG', 'INFO', 'WARNING', 'ERROR',
                                 'CRITICAL'),
                        help='the logging level (default: %(default)s)')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='log at the DEBUG level')
    subparsers = parser.add_subparsers(dest='command_name', required=True,
                                       metavar='COMMAND')

    canon = subparsers.add_parser('canon',
                                  help='print the canonical form')
    canon.add_argument('--pseudo', action='store_true',
                       help='print the pseudo normal form instead')
    canon.add_argument('--json', action='store_true',
                       help='print breakpoints and pieces as JSON')
    canon.add_argument('file', nargs='?', default='-')
    canon.set_defaults(run=_run_canon)

    eval_ = subparsers.add_parser('eval',
                                  help='print the value at a point')
    eval_.add_argument('--at', required=True, metavar='RAT',
                       help='the point, a rational like -3/2 or 7')
    eval_.add_argument('file', nargs='?', default='-')
    eval_.set_defaults(run=_run_eval)

    equiv = subparsers.add_parser('equiv',
                                  help='decide extensional equivalence')
    equiv.add_argument('file1')
    equiv.add_argument('file2')
    equiv.set_defaults(run=_run_equiv)

    refine = subparsers.add_parser('refine',
                                   help='print the exact refinement by the'
                                         ' given breakpoints')
    refine.add_argument('--points', required=True, metavar='R1,R2,...',
                        help='comma-separated rationals')
    refine.add_argument('--json', action='store_true',
                        help='print breakpoints and pieces as JSON')
    refine.add_argument('file', nargs='?', default='-')
    refine.set_defaults(run=_run_refine)

    bench = subparsers.add_parser('bench',
                                  help='benchmark the canonical form')
    bench.add_argument('--breakpoints', type=int, required=True, metavar='N')
    bench.add_argument('--reps', type=int, required=True, metavar='R')
    bench.add_argument('--seed', type=int, default=0)
    bench.add_argument('--degree', type=int, default=2,
                       help='the maximum degree of the pieces (default:'
                             ' %(default)s)')
    bench.add_argument('--probes', type=int, default=1000,
                       help='the number of chi probes (default:'
                             ' %(default)s)')
    bench.add_argument('--jobs', type=int, default=1,
                       help='the number of concurrent repetitions (default:'
                             ' %(default)s)')
    bench.add_argument('--json', action='store_true',
                       help='print the report as JSON')
    bench.set_defaults(run=_run_bench)

    return parser


def _print_operator(p, domain, json):
    if json:
        print(_pw.as_json(p, domain=domain))
    else:
        print(_pw.pformat(p, domain=domain))


def _read_expression(path):
    if path == '-':
        text = _sys.stdin.read()
    else:
        with open(path, 'r', encoding='utf-8') as file_:
            text = file_.read()
    return _pw.parse(text)


def _run_bench(args):
    report = _pw.run_benchmark(args.breakpoints, args.reps, seed=args.seed,
                               degree=args.degree, probes=args.probes,
                               jobs=args.jobs, domain=args.domain)
    if args.json:
        print(_json.dumps(report.as_dict(), indent=2, sort_keys=True))
    else:
        print(report)
    return 0


def _run_canon(args):
    domain = _pw.as_domain(args.domain)
    expr = _read_expression(args.file)
    if args.pseudo:
        result = _pw.pseudonormalform(_pw.denest(expr), domain=domain)
    else:
        result = _pw.canonical_form(expr, domain=domain)
    _print_operator(result, domain, args.json)
    return 0


def _run_equiv(args):
    domain = _pw.as_domain(args.domain)
    p = _read_expression(args.file1)
    q = _read_expression(args.file2)
    equivalent = _pw.equiv_piecewise(p, q, domain=domain)
    print('true' if equivalent else 'false')
    return 0 if equivalent else 1


def _run_eval(args):
    domain = _pw.as_domain(args.domain)
    point = _pw.as_breakpoint(args.at)
    p = _pw.denest(_read_expression(args.file))
    print(_pw.evaluate(p, point, domain=domain))
    return 0


def _run_refine(args):
    domain = _pw.as_domain(args.domain)
    points = _pw.BreakpointSet.from_iterable(
        point for point in args.points.split(',') if point.strip())
    p = _pw.denest(_read_expression(args.file))
    _print_operator(_pw.refine(p, points), domain, args.json)
    return 0


_logger = _logging.getLogger(__name__)


if __name__ == '__main__':
    _sys.exit(main())
