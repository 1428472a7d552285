"""
Management command exposing the lab: ``python manage.py tracepi <subcommand>``.

Results go to standard output as one JSON document (``--pretty`` for a
human rendering); diagnostics go to standard error through logging.
Exit codes: 2 parse or validation error, 3 invalid algebra spec,
4 budget or degree cap exceeded.
"""
import argparse
import logging

from django.core.management.base import BaseCommand, CommandError, CommandParser
from rest_framework import serializers

from core.conf import default_seed
from core.exceptions import BudgetExceededError, InvalidAlgebraError, TracePIError
from core.sampling import ParameterSampler
from exactlinalg.rational import parse_rational
from freetrace.bases import enumerate_MT_basis, enumerate_PT_basis
from algebra.analysis import check_trace_hom, is_trace_degenerate, is_nilpotent, jacobson_radical, trace_space
from algebra.morphisms import radical_trace_witness
from ideals.components import consequences_multilinear, ideal_contains
from evalcodim.claims import run_claims
from evalcodim.codimension import codim_sequence
from evalcodim.comparison import find_separating_identity, tideal_leq
from evalcodim.evaluation import evaluate, find_nonvanishing_tuple
from cli.loaders import load_algebra, load_generators, load_map
from cli.output import render_json, render_pretty
from cli.parser import parse_polynomial

logger = logging.getLogger(__name__)

EXIT_USAGE = 2
EXIT_ALGEBRA = 3
EXIT_BUDGET = 4


class SubcommandParser(CommandParser):
    """Sub-parser whose usage errors carry exit code 2 outside the shell too."""

    def error(self, message):
        raise CommandError(f'Error: {message}', returncode=EXIT_USAGE)


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=None, help='Seed for "sample" parameters')
    common.add_argument('--pretty', action='store_true', help='Human-readable output')
    return common


class Command(BaseCommand):
    help = 'Trace identities, codimensions and trace T-ideals of finite-dimensional algebras'

    def add_arguments(self, parser):
        common = _common_options()
        subparsers = parser.add_subparsers(
            dest='subcommand', required=True, parser_class=SubcommandParser
        )

        basis = subparsers.add_parser('basis', parents=[common], help='Enumerate MTn or PTn')
        basis.add_argument('--n', type=int, required=True)
        basis.add_argument('--pure', action='store_true', help='Pure trace monomials (PTn)')

        canon = subparsers.add_parser('canon', parents=[common], help='Canonical form of a polynomial')
        canon.add_argument('--poly', required=True)

        evaluate_ = subparsers.add_parser('eval', parents=[common], help='Evaluate a polynomial')
        evaluate_.add_argument('--algebra', required=True)
        evaluate_.add_argument('--poly', required=True)
        evaluate_.add_argument(
            '--value', action='append', default=[],
            help='xN=<basis label> or xN=<comma separated coordinates>',
        )

        check = subparsers.add_parser('check', parents=[common], help='Is the polynomial an identity?')
        check.add_argument('--algebra', required=True)
        check.add_argument('--poly', required=True)

        codim = subparsers.add_parser('codim', parents=[common], help='Trace codimensions c_1..c_n')
        codim.add_argument('--algebra', required=True)
        codim.add_argument('--n', type=int, required=True)
        codim.add_argument('--budget', type=int, default=None)

        ideal_dim = subparsers.add_parser('ideal-dim', parents=[common], help='Degree-n part of a generated ideal')
        ideal_dim.add_argument('--generators', required=True)
        ideal_dim.add_argument('--n', type=int, required=True)

        member = subparsers.add_parser('ideal-member', parents=[common], help='Membership in a generated ideal')
        member.add_argument('--generators', required=True)
        member.add_argument('--poly', required=True)

        for name, text in [('compare', 'Is Id(A) inside Id(B) in degree n?'),
                           ('separate', 'An identity of A that fails on B')]:
            sub = subparsers.add_parser(name, parents=[common], help=text)
            sub.add_argument('--a', required=True)
            sub.add_argument('--b', required=True)
            sub.add_argument('--n', type=int, required=True)

        for name, text in [('trace-space', 'All traces of the algebra'),
                           ('radical', 'Jacobson radical and the C2 witness'),
                           ('degenerate', 'Is the trace form degenerate?')]:
            sub = subparsers.add_parser(name, parents=[common], help=text)
            sub.add_argument('--algebra', required=True)

        hom = subparsers.add_parser('hom-check', parents=[common], help='Is a matrix a trace homomorphism?')
        hom.add_argument('--a', required=True)
        hom.add_argument('--b', required=True)
        hom.add_argument('--map', required=True, help='JSON rows: row i is the image of basis element i')

        verify = subparsers.add_parser('verify', parents=[common], help='Run the claim catalogue')
        verify.add_argument('--n', type=int, default=4)
        verify.add_argument('--samples', type=int, default=1)

    def handle(self, *args, **options):
        seed = options['seed'] if options.get('seed') is not None else default_seed()
        self.sampler = ParameterSampler(seed)
        subcommand = options['subcommand']
        handler = getattr(self, 'handle_' + subcommand.replace('-', '_'))
        logger.debug('tracepi %s with seed %d', subcommand, seed)
        try:
            document = handler(options)
        except CommandError:
            raise
        except InvalidAlgebraError as exc:
            raise CommandError(str(exc), returncode=EXIT_ALGEBRA)
        except BudgetExceededError as exc:
            raise CommandError(str(exc), returncode=EXIT_BUDGET)
        except serializers.ValidationError as exc:
            raise CommandError(f'invalid input: {exc.detail}', returncode=EXIT_USAGE)
        except (TracePIError, ValueError, OSError) as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)
        document['seed'] = seed
        document['subcommand'] = subcommand
        if options.get('pretty'):
            self.stdout.write(render_pretty(document))
        else:
            self.stdout.write(render_json(document))

    def algebra(self, reference):
        return load_algebra(reference, self.sampler)

    def handle_basis(self, options):
        n = options['n']
        monomials = enumerate_PT_basis(n) if options['pure'] else enumerate_MT_basis(n)
        return {
            'n': n,
            'space': 'PT' if options['pure'] else 'MT',
            'dimension': len(monomials),
            'monomials': [str(m) for m in monomials],
        }

    def handle_canon(self, options):
        f = parse_polynomial(options['poly'])
        return {'canonical': str(f), 'degree': f.degree, 'terms': len(f)}

    def _assignment(self, a, values):
        assignment = {}
        for item in values:
            variable, sep, text = item.partition('=')
            if not sep or not variable.strip().startswith('x') or not variable.strip()[1:].isdigit():
                raise ValueError(f'expected xN=<value>, got {item!r}')
            text = text.strip()
            if text in a.labels:
                value = a.basis_vector(a.index_of(text))
            else:
                value = tuple(parse_rational(part) for part in text.split(','))
            assignment[int(variable.strip()[1:])] = value
        return assignment

    def handle_eval(self, options):
        a = self.algebra(options['algebra'])
        f = parse_polynomial(options['poly'])
        value = evaluate(f, a, self._assignment(a, options['value']))
        return {'algebra': a.name, 'polynomial': str(f), 'value': str(value), 'coordinates': value.coords}

    def handle_check(self, options):
        a = self.algebra(options['algebra'])
        f = parse_polynomial(options['poly'])
        found = find_nonvanishing_tuple(f, a)
        witness = None
        if found is not None:
            indices, value = found
            witness = {'assignment': [a.labels[i] for i in indices], 'value': str(value)}
        return {'algebra': a.name, 'polynomial': str(f), 'is_identity': found is None, 'witness': witness}

    def handle_codim(self, options):
        a = self.algebra(options['algebra'])
        return {'algebra': a.name, 'sequence': codim_sequence(a, options['n'], budget=options['budget'])}

    def handle_ideal_dim(self, options):
        generators = load_generators(options['generators'])
        component = consequences_multilinear(generators, options['n'])
        return {
            'generators': generators.describe(),
            'n': options['n'],
            'dimension': component.dimension,
            'quotient_dimension': component.quotient_dimension,
        }

    def handle_ideal_member(self, options):
        generators = load_generators(options['generators'])
        f = parse_polynomial(options['poly'])
        component = consequences_multilinear(generators, f.degree)
        return {'generators': generators.describe(), 'polynomial': str(f), 'member': ideal_contains(component, f)}

    def handle_compare(self, options):
        a, b = self.algebra(options['a']), self.algebra(options['b'])
        return {'a': a.name, 'b': b.name, 'n': options['n'], 'leq': tideal_leq(a, b, options['n'])}

    def handle_separate(self, options):
        a, b = self.algebra(options['a']), self.algebra(options['b'])
        found = find_separating_identity(a, b, options['n'])
        witness = None
        if found is not None:
            witness = {
                'polynomial': str(found.polynomial),
                'assignment': list(found.labels),
                'value': str(found.value),
            }
        return {'a': a.name, 'b': b.name, 'n': options['n'], 'witness': witness}

    def handle_trace_space(self, options):
        a = self.algebra(options['algebra'])
        space = trace_space(a)
        return {'algebra': a.name, 'dimension': space.dimension, 'basis': space.vectors()}

    def handle_radical(self, options):
        a = self.algebra(options['algebra'])
        radical = jacobson_radical(a)
        witness = radical_trace_witness(a)
        return {
            'algebra': a.name,
            'dimension': radical.dimension,
            'basis': [a.render(v) for v in radical.vectors()],
            'nilpotent': is_nilpotent(a, radical),
            'trace_vanishes': witness is None,
            'c2_witness': None if witness is None else {
                'alpha': witness.alpha,
                'beta': witness.beta,
                'element': str(witness.element),
                'verified': witness.verified,
            },
        }

    def handle_degenerate(self, options):
        a = self.algebra(options['algebra'])
        return {'algebra': a.name, 'degenerate': is_trace_degenerate(a)}

    def handle_hom_check(self, options):
        a, b = self.algebra(options['a']), self.algebra(options['b'])
        phi = load_map(options['map'], a, b)
        return {'a': a.name, 'b': b.name, 'is_trace_hom': check_trace_hom(phi, a, b)}

    def handle_verify(self, options):
        report = run_claims(self.sampler, n_max=options['n'], samples=options['samples'])
        holds = all(r['holds'] for sample in report for r in sample['results'])
        return {'holds': holds, 'samples': report}
