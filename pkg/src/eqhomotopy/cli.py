"""Command line front end.

    python -m eqhomotopy compute --group D6 --grading "1+s-g"
    python -m eqhomotopy mackey --group A5 --grading "3-V3-V4" --check
    python -m eqhomotopy cellhom --catalog K4 --n 2 --coeff 2
    python -m eqhomotopy families --group D10
    python -m eqhomotopy marks --group A4 --json
    python -m eqhomotopy verify --suite anchors

Results go to stdout in a fixed order; log records go to stderr.  The exit
status is 0 exactly when every requested computation or check succeeded.
"""

import argparse
import collections
import itertools
import json
import logging
import sys

from sympy import factorint

from .abelian import FGAbelianGroup
from .burnside import marks
from .cellhom import (bockstein_consistency, k4_dimension_sequences, orbit_complex,
                      sphere_complex, tau_action_check)
from .errors import DenominatorError, EqHomotopyError, GradingError
from .families import all_families, family_not_containing, required_inverted_primes, \
    solve_cH
from .group_core import make_group, subgroup_lattice
from .mackey import (assemble, check_all, check_cohomological, check_transfer_oracle,
                     constant_functor, dual_constant_functor, equivalent_up_to_signs,
                     lewis_diagram)
from .presentations import graded_piece_of_presentation
from .reps import VirtualRep, format_grading, group_kind, parse_grading
from .splitter import (a5_two_local_transport, compute_homotopy, d2p_by_reduction,
                       localized_homotopy)

__all__ = ['VerifyCase', 'build_parser', 'run', 'main', 'anchor_suite', 'full_suite']

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

VerifyCase = collections.namedtuple(
    'VerifyCase', ['id', 'group', 'grading', 'expected', 'source', 'kind'])
VerifyCase.__new__.__defaults__ = ('group',)
VerifyCase.__doc__ = """One verification: ``kind`` selects how ``expected`` is compared.

    group         expected is the str() of pi^G_V(HZ)
    mackey        expected is a dict of levels and free res/tr labels
    template      expected is 'constant' or 'dual'
    presentation  expected names the presentation compared against
    local         expected is (presentation, prime)
    reduction     expected is the odd prime of a dihedral group
    transport     expected is None; the 2-local A5 value is read on A4
    bockstein     grading holds n for S^{nV} of K4
    dimensions    grading holds n for S^{nV} of K4
    tau           grading holds n for S^{n l}, expected is the odd prime
    families      expected is None; every family must split over its primes

``source`` is 'example' for worked examples and 'derived' for oracles.
"""


# Presentation lookup for the generator labels of `compute`.

def _presentation_for(G, V, prime=None):
    kind = group_kind(G)
    if prime and kind != 'A5':
        return None, None
    if kind == 'C2':
        return 'c2', None
    if kind == 'Cp':
        return 'cp', G.order
    if kind == 'D':
        return 'dihedral', G.order // 2
    if kind == 'K4':
        return 'k4-positive', None
    if kind == 'A5' and prime in (3, 5):
        return 'a5-%dlocal' % prime, prime
    return None, None


def _generator_labels(G, V, prime=None):
    name, p = _presentation_for(G, V, prime)
    if name is None:
        return None
    try:
        piece = graded_piece_of_presentation(name, V, p)
    except GradingError:
        return None
    return [label for label, _ in piece.labels]


# Verification battery.

_A5_FREE = {
    'levels': {n: 'Z' for n in ('e', 'C2', 'C3', 'K4', 'C5', 'D6', 'D10', 'A4', 'A5')},
    'res': {('A5', 'D6'): 10, ('A5', 'A4'): 5, ('A5', 'D10'): 2},
    'tr': {('D6', 'A5'): 1, ('A4', 'A5'): 1, ('D10', 'A5'): 3},
}

_A5_TORSION = {
    'levels': {'e': '0', 'C2': 'Z/2', 'C3': 'Z/3', 'K4': 'Z/2 x Z/2 x Z/2', 'C5': 'Z/5',
               'D6': 'Z/6', 'D10': 'Z/10', 'A4': 'Z/6', 'A5': 'Z/30'},
    'res': {('A4', 'K4'): [[1, 0], [1, 0], [1, 0]]},
    'tr': {('K4', 'A4'): [[1, 1, 1], [0, 0, 0]]},
}


def anchor_suite():
    """Worked examples plus a sample of derived oracles."""
    return [
        VerifyCase('c2-negative-cone', 'C2', '-3 + 3s', 'Z/2', 'example'),
        VerifyCase('c2-point', 'C2', '0', 'Z', 'example'),
        VerifyCase('d6-unit', 'D6', '1 + s - g', 'Z', 'example'),
        VerifyCase('d6-sign', 'D6', '-s', 'Z/2', 'example'),
        VerifyCase('d6-rotation', 'D6', '-g', 'Z/3', 'example'),
        VerifyCase('k4-top-class', 'K4', '3 - V', 'Z', 'example'),
        VerifyCase('k4-positive-0', 'K4', '-V', 'Z/2', 'example'),
        VerifyCase('k4-positive-1', 'K4', '1 - V', 'Z/2 x Z/2', 'example'),
        VerifyCase('k4-positive-2', 'K4', '2 - V', '0', 'example'),
        VerifyCase('k4-negative-top', 'K4', 'V - 3', 'Z', 'example'),
        VerifyCase('a5-point', 'A5', '0', 'Z', 'example'),
        VerifyCase('a5-free', 'A5', 'V3 + V4 - V5 - 2', 'Z', 'example'),
        VerifyCase('a5-torsion', 'A5', '3 - V3 - V4', 'Z/30', 'example'),
        VerifyCase('a5-free-mackey', 'A5', 'V3 + V4 - V5 - 2', _A5_FREE, 'example',
                   'mackey'),
        VerifyCase('a5-torsion-mackey', 'A5', '3 - V3 - V4', _A5_TORSION, 'example',
                   'mackey'),
        VerifyCase('k4-dual-constant', 'K4', 'V - 3', 'dual', 'example', 'template'),
        VerifyCase('k4-constant', 'K4', '3 - V', 'constant', 'example', 'template'),
        VerifyCase('d10-oracle', 'D10', '2 - s + g', 'dihedral', 'derived',
                   'presentation'),
        VerifyCase('d6-reduction', 'D6', '1 - 2s + g', 3, 'derived', 'reduction'),
        VerifyCase('a5-3-local', 'A5', '-1 + V4 - V5', ('a5-3local', 3), 'derived',
                   'local'),
        VerifyCase('a5-2-local', 'A5', '1 - V3 + V5', None, 'derived', 'transport'),
        VerifyCase('k4-bockstein-2', 'K4', 2, None, 'derived', 'bockstein'),
        VerifyCase('k4-dimensions-2', 'K4', 2, None, 'derived', 'dimensions'),
        VerifyCase('d6-families', 'D6', None, None, 'derived', 'families'),
    ]


def _sample(items, count):
    items = list(items)
    step = max(1, len(items) // count)
    return items[::step][:count]


def _text(group, coefficients):
    return format_grading(VirtualRep(make_group(group), coefficients))


def full_suite():
    """The anchor suite followed by the exhaustive oracle ranges."""
    cases = anchor_suite()
    for a, b in itertools.product(range(-10, 11), repeat=2):
        cases.append(VerifyCase('c2[%d,%d]' % (a, b), 'C2', _text('C2', {'1': a, 's': b}),
                                'c2', 'derived', 'presentation'))
    for p in (3, 5):
        G = 'C%d' % p
        for a, b in itertools.product(range(-8, 9), repeat=2):
            grading = _text(G, {'1': a, 'l': b})
            cases.append(VerifyCase('c%d[%d,%d]' % (p, a, b), G, grading,
                                    'cp', 'derived', 'presentation'))
    for p in (3, 5):
        G = 'D%d' % (2 * p)
        for k, m, n in itertools.product(range(-4, 5), repeat=3):
            grading = _text(G, {'1': k, 's': m, 'g': n})
            tag = '[%d,%d,%d]' % (k, m, n)
            cases.append(VerifyCase(G.lower() + tag, G, grading, 'dihedral', 'derived',
                                    'presentation'))
            cases.append(VerifyCase(G.lower() + '-reduction' + tag, G, grading, p,
                                    'derived', 'reduction'))
    for a, b in itertools.product(range(-12, 13), range(-4, 5)):
        name = 'k4-negative' if b > 0 else 'k4-positive'
        grading = _text('K4', {'1': a, 'V1': b, 'V2': b, 'V3': b})
        cases.append(VerifyCase('k4[%d,%d]' % (a, b), 'K4', grading, name, 'derived',
                                'presentation'))
    for n1, n3, n4, n5 in _sample(itertools.product(range(-2, 3), repeat=4), 20):
        grading = _text('A5', {'1': n1, 'V3': n3, 'V4': n4, 'V5': n5})
        tag = '[%d,%d,%d,%d]' % (n1, n3, n4, n5)
        cases.append(VerifyCase('a5-3' + tag, 'A5', grading, ('a5-3local', 3), 'derived',
                                'local'))
        cases.append(VerifyCase('a5-5' + tag, 'A5', grading, ('a5-5local', 5), 'derived',
                                'local'))
        cases.append(VerifyCase('a5-2' + tag, 'A5', grading, None, 'derived',
                                'transport'))
    for p, n in itertools.product((3, 5), range(1, 6)):
        cases.append(VerifyCase('c%d-tau-%d' % (p, n), 'C%d' % p, n, p, 'derived', 'tau'))
    for n in range(1, 7):
        cases.append(VerifyCase('k4-bockstein-%d' % n, 'K4', n, None, 'derived',
                                'bockstein'))
        cases.append(VerifyCase('k4-dimensions-%d' % n, 'K4', n, None, 'derived',
                                'dimensions'))
    for G in ('D6', 'D10', 'K4', 'A4', 'A5'):
        cases.append(VerifyCase('%s-families' % G.lower(), G, None, None, 'derived',
                                'families'))
    # the anchor suite already covers some of these ids
    return list(collections.OrderedDict((c.id, c) for c in cases).values())


def _grading(case):
    G = make_group(case.group)
    return G, parse_grading(G, case.grading)


def _check_group(case):
    G, V = _grading(case)
    got = str(compute_homotopy(G, V))
    return got == case.expected, case.expected, got


def _free_label(matrix):
    return abs(matrix.rows[0][0]) if matrix.shape == (1, 1) else matrix.tolist()


def _check_mackey(case):
    G, V = _grading(case)
    M = assemble(G, V)
    exp = case.expected
    got = {'levels': {n: str(M.value(n)) for n in M.names()},
           'res': {pair: _free_label(M.res(*pair)) for pair in exp['res']},
           'tr': {pair: _free_label(M.tr(*pair)) for pair in exp['tr']}}
    checks = check_cohomological(M)
    checks.extend(check_transfer_oracle(M))
    ok = got == exp and checks.ok
    if not checks.ok:
        got['issues'] = checks.issues
    return ok, _render(exp), _render(got)


def _check_template(case):
    G, V = _grading(case)
    M = assemble(G, V)
    template = constant_functor(G) if case.expected == 'constant' \
        else dual_constant_functor(G)
    ok = equivalent_up_to_signs(M, template)
    return ok, case.expected, case.expected if ok else lewis_diagram(M)


def _check_presentation(case):
    G, V = _grading(case)
    p = G.order // 2 if case.expected == 'dihedral' else None
    expected = graded_piece_of_presentation(case.expected, V, p).group
    got = compute_homotopy(G, V)
    return got == expected, str(expected), str(got)


def _check_local(case):
    G, V = _grading(case)
    name, p = case.expected
    expected = graded_piece_of_presentation(name, V, p).group.localize(p)
    got = localized_homotopy(G, V, p).group
    return got == expected, str(expected), str(got)


def _check_reduction(case):
    G, V = _grading(case)
    k, m, n = V['1'], V['s'], V['g']
    expected = d2p_by_reduction(case.expected, k, m, n)
    got = compute_homotopy(G, V)
    return got == expected, str(expected), str(got)


def _check_transport(case):
    G, V = _grading(case)
    expected = a5_two_local_transport(V['1'], V['V3'], V['V4'], V['V5'])
    got = localized_homotopy(G, V, 2).group
    return got == expected, str(expected), str(got)


def _check_bockstein(case):
    report = bockstein_consistency(case.grading)
    return report.ok, 'clean', 'clean' if report.ok else '; '.join(report.issues)


def _check_tau(case):
    report = tau_action_check(case.expected, case.grading)
    return report.ok, 'clean', 'clean' if report.ok else '; '.join(report.issues)


def _check_dimensions(case):
    n = case.grading
    f2, z = k4_dimension_sequences(n)
    C = sphere_complex('K4', n)
    dims = C.reduce(2).homology()
    groups = C.homology()
    empty = FGAbelianGroup(0)
    got_f2 = [dims.get(d, 0) for d in range(3 * n + 1)]
    got_z = [len(groups.get(d, empty).invariant_factors) for d in range(3 * n)]
    ok = got_f2 == f2 and got_z == z and str(groups.get(3 * n)) == 'Z' and \
        groups.get(3 * n - 1, empty).is_trivial()
    return ok, '%s / %s' % (f2, z), '%s / %s' % (got_f2, got_z)


def _check_families(case):
    G = make_group(case.group)
    lattice = subgroup_lattice(G)
    if case.group == 'A5':
        families = [family_not_containing(G, c.name) for c in lattice]
    else:
        families = all_families(G)
    failures = []
    for F in families:
        S = required_inverted_primes(F)
        try:
            solve_cH(F, S)
        except DenominatorError as exc:
            failures.append('%s needs %d' % (F, exc.prime))
    return not failures, '%d families split' % len(families), \
        '; '.join(failures) if failures else '%d families split' % len(families)


_RUNNERS = {
    'group': _check_group,
    'mackey': _check_mackey,
    'template': _check_template,
    'presentation': _check_presentation,
    'local': _check_local,
    'reduction': _check_reduction,
    'transport': _check_transport,
    'bockstein': _check_bockstein,
    'tau': _check_tau,
    'dimensions': _check_dimensions,
    'families': _check_families,
}


def _render(value):
    if isinstance(value, dict):
        return json.dumps({(k if isinstance(k, str) else '%s->%s' % k): _plain(v)
                           for k, v in value.items()}, sort_keys=True)
    return str(value)


def _plain(value):
    if isinstance(value, dict):
        return {(k if isinstance(k, str) else '%s->%s' % k): _plain(v)
                for k, v in value.items()}
    return value


def run_case(case):
    """(ok, expected, got) for one VerifyCase; errors count as failures."""
    try:
        return _RUNNERS[case.kind](case)
    except EqHomotopyError as exc:
        logger.debug('case %s raised %r', case.id, exc)
        return False, _render(case.expected), '%s: %s' % (type(exc).__name__, exc)


# Subcommands.

def _cmd_compute(args, out):
    G = make_group(args.group)
    V = parse_grading(G, args.grading)
    if args.prime:
        result = localized_homotopy(G, V, args.prime).group
    else:
        result = compute_homotopy(G, V)
    labels = _generator_labels(G, V, args.prime)
    if args.json:
        _dump({'schema': SCHEMA_VERSION, 'group': G.name, 'grading': format_grading(V),
               'prime': args.prime, 'result': result.to_json(), 'text': str(result),
               'generators': labels}, out)
    else:
        text = str(result)
        if labels:
            text += ', %s %s' % ('generator' if len(labels) == 1 else 'generators',
                                 ', '.join(labels))
        print(text, file=out)
    return 0


def _cmd_mackey(args, out):
    G = make_group(args.group)
    M = assemble(G, parse_grading(G, args.grading))
    report = check_all(M) if args.check else None
    if args.json:
        data = M.to_json()
        data['schema'] = SCHEMA_VERSION
        if report is not None:
            data['checks'] = {'ok': report.ok, 'checked': report.checked,
                              'issues': report.issues}
        _dump(data, out)
    else:
        print(lewis_diagram(M), file=out)
        if report is not None:
            print('checks: %d run, %s' % (report.checked, 'ok' if report.ok else
                                          '%d issues' % len(report.issues)), file=out)
            for issue in report.issues:
                print('  ' + issue, file=out)
    return 0 if report is None or report.ok else 1


def _coefficients(text):
    if text.upper() in ('Z', 'ZZ'):
        return 'Z'
    p = int(text.upper().replace('F_', '').replace('F', ''))
    if set(factorint(p)) != {p}:
        raise GradingError("Cannot use coefficients %r: not a prime field" % (text,))
    return p


def _cmd_cellhom(args, out):
    coeff = _coefficients(args.coeff)
    if args.cohomology:
        C = orbit_complex(args.catalog, args.n, coeff)
        groups = C.cohomology()
    else:
        C = sphere_complex(args.catalog, args.n, coeff)
        groups = C.homology()
    kind = 'H^' if args.cohomology else 'H_'
    if args.json:
        data = {'schema': SCHEMA_VERSION, 'catalog': args.catalog, 'n': args.n,
                'coefficients': str(coeff), 'cohomology': args.cohomology,
                'groups': {str(d): (g.to_json() if coeff == 'Z' else g)
                           for d, g in sorted(groups.items())}}
        if args.emit_complex:
            data['complex'] = C.to_json()
        _dump(data, out)
        return 0
    for d, g in sorted(groups.items()):
        print('%s%d = %s' % (kind, d, g if coeff == 'Z' else 'F_%d^%d' % (coeff, g)),
              file=out)
    if args.emit_complex:
        for d in C.degrees():
            print('C_%d: %d cells, boundary %r' % (d, C.rank(d), C.boundary(d).tolist()),
                  file=out)
    return 0


def _cmd_families(args, out):
    G = make_group(args.group)
    rows = []
    status = 0
    for F in all_families(G):
        S = sorted(required_inverted_primes(F))
        try:
            coeffs = {k: str(v) for k, v in solve_cH(F, S).items()}
        except DenominatorError as exc:
            coeffs = None
            status = 1
            logger.warning('%r does not split over S=%s: needs %d', F, S, exc.prime)
        rows.append((F.names(), S, coeffs))
    if args.json:
        _dump({'schema': SCHEMA_VERSION, 'group': G.name,
               'families': [{'members': m, 'primes': S, 'coefficients': c}
                            for m, S, c in rows]}, out)
        return status
    for members, S, coeffs in rows:
        text = ', '.join('c_%s=%s' % kv for kv in coeffs.items()) if coeffs is not None \
            else 'no splitting'
        print('{%s}  S={%s}  %s' % (', '.join(members), ', '.join(map(str, S)), text),
              file=out)
    return status


def _cmd_marks(args, out):
    table = marks(make_group(args.group))
    if args.json:
        data = table.to_json()
        data['schema'] = SCHEMA_VERSION
        _dump(data, out)
    else:
        print(table.format(), file=out)
    return 0


def _cmd_verify(args, out):
    cases = anchor_suite() if args.suite == 'anchors' else full_suite()
    results = []
    for case in cases:
        ok, expected, got = run_case(case)
        results.append((case, ok, expected, got))
    failed = [r for r in results if not r[1]]
    if args.json:
        _dump({'schema': SCHEMA_VERSION, 'suite': args.suite,
               'passed': len(results) - len(failed), 'failed': len(failed),
               'cases': [{'id': c.id, 'kind': c.kind, 'source': c.source, 'ok': ok,
                          'expected': str(e), 'got': str(g)}
                         for c, ok, e, g in results]}, out)
    else:
        width = max(len(c.id) for c, _, _, _ in results)
        for case, ok, expected, got in results:
            if ok:
                print('PASS  %-*s  %s' % (width, case.id, got), file=out)
            else:
                print('FAIL  %-*s' % (width, case.id), file=out)
                print('  - %s' % expected, file=out)
                print('  + %s' % got, file=out)
        print('%d passed, %d failed' % (len(results) - len(failed), len(failed)),
              file=out)
    return 1 if failed else 0


def _dump(data, out):
    json.dump(data, out, indent=2, sort_keys=True)
    out.write('\n')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='eqhomotopy',
        description='Equivariant homotopy of HZ for small finite groups.')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='INFO logging with -v, DEBUG with -vv (stderr)')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    def group_command(name, help_text, grading=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('--group', required=True,
                       help='catalog id: C2, C3, K4, D6, A4, A5')
        if grading:
            p.add_argument('--grading', required=True,
                           help='integers and irreps joined by + and -, e.g. "3-V3-V4"')
        p.add_argument('--json', action='store_true', help='emit JSON')
        return p

    p = group_command('compute', 'pi^G_V(HZ) as a finitely generated abelian group',
                      grading=True)
    p.add_argument('--prime', type=int, default=None, help='localize at this prime')
    p.set_defaults(func=_cmd_compute)

    p = group_command('mackey', 'the Mackey functor pi_V(HZ) as a Lewis diagram',
                      grading=True)
    p.add_argument('--check', action='store_true', help='run every structural check')
    p.set_defaults(func=_cmd_mackey)

    p = sub.add_parser('cellhom', help='homology of a representation sphere model')
    p.add_argument('--catalog', required=True, help='C2, C<p> or K4')
    p.add_argument('--n', type=int, required=True, help='multiple of the representation')
    p.add_argument('--coeff', default='Z', help='Z or a prime p for F_p')
    p.add_argument('--cohomology', action='store_true',
                   help='cohomology of the orbit space')
    p.add_argument('--emit-complex', action='store_true', help='also print the complex')
    p.add_argument('--json', action='store_true', help='emit JSON')
    p.set_defaults(func=_cmd_cellhom)

    p = group_command('families', 'families of subgroups and their splitting primes')
    p.set_defaults(func=_cmd_families)

    p = group_command('marks', 'table of marks')
    p.set_defaults(func=_cmd_marks)

    p = sub.add_parser('verify', help='run the verification battery')
    p.add_argument('--suite', choices=('anchors', 'all'), default='anchors')
    p.add_argument('--json', action='store_true', help='emit JSON')
    p.set_defaults(func=_cmd_verify)
    return parser


def _configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def run(argv=None, out=None):
    """Run one command; returns the exit status."""
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    _configure_logging(args.verbose)
    logger.info('running %s', args.command)
    try:
        return args.func(args, out)
    except EqHomotopyError as exc:
        print('error: %s' % exc, file=sys.stderr)
        return 1


def main():
    sys.exit(run())
