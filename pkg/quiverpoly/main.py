"""Commandline utility for quiverpoly package."""

import argparse
import concurrent.futures
import itertools
import logging
import pathlib
import sys

import pandas as pd
import timing

from .general import QuiverPolyError, DocumentReader, DocumentWriter
from .documents import parse_quiver, encode_quiver, parse_dimension, parse_orbit, \
    encode_orbit, parse_partition, encode_partition, encode_pair, encode_chern, encode_schur, \
    encode_roots
from .evaluator import FORM_NAMES, DEFAULT_FORM, compute, verify, positivity_report, \
    orbit_codimension
from .orbits import enumerate_orbits
from .rootsys import DynkinType, standard_quiver, detect_dynkin_type, quiver_roots
from .suite import suite_names, run_suite

_LOG = logging.getLogger(__name__)

_TIME = timing.get_timing_group(__name__)

_RUNS = itertools.count()

PROG_NAME = 'quiverpoly'
COPYRIGHT_NOTICE = 'Distributed under the Apache License 2.0'
EXIT_MISMATCH = 3


class Stage:

    """Name of the pipeline stage currently running, reported when it fails."""

    def __init__(self):
        self.current = 'parse'

    def __str__(self):
        return self.current


def _read_quiver(parsed_args, reader: DocumentReader):
    if getattr(parsed_args, 'type', None) is not None:
        return standard_quiver(DynkinType.from_str(parsed_args.type))
    if parsed_args.quiver is None:
        raise argparse.ArgumentTypeError('either --quiver or --type is required')
    return parse_quiver(reader.read_argument(parsed_args.quiver))


def _emit(document, parsed_args, writer: DocumentWriter) -> None:
    if getattr(parsed_args, 'output', None) is not None:
        writer.write_file(document, pathlib.Path(parsed_args.output))
        return
    sys.stdout.write(writer.write_text(document))


def cmd_roots(parsed_args, stage: Stage, reader: DocumentReader, writer: DocumentWriter):
    quiver = _read_quiver(parsed_args, reader)
    stage.current = 'roots'
    type_ = detect_dynkin_type(quiver)
    roots = quiver_roots(quiver)
    if parsed_args.json:
        _emit({'quiver': encode_quiver(quiver), 'type': str(type_),
               'roots': encode_roots(roots)}, parsed_args, writer)
        return
    table = pd.DataFrame(data=[[str(root), root.height] for root in roots],
                         columns=['root', 'height'])
    print('{} positive roots of {} ({})'.format(len(roots), type_, quiver))
    print(table.to_string())


def _codimension(arguments) -> int:
    return orbit_codimension(*arguments)


def cmd_orbits(parsed_args, stage: Stage, reader: DocumentReader, writer: DocumentWriter):
    quiver = _read_quiver(parsed_args, reader)
    e = parse_dimension(parsed_args.dim, quiver)
    marked = None
    if parsed_args.mark is not None:
        marked = parse_orbit(reader.read_argument(parsed_args.mark), quiver, e)
    stage.current = 'orbits'
    orbits = enumerate_orbits(quiver, e)
    stage.current = 'resolution'
    tasks = [(quiver, e, label) for label in orbits]
    if parsed_args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=parsed_args.jobs) as executor:
            codimensions = list(executor.map(_codimension, tasks))
    else:
        codimensions = [_codimension(task) for task in tasks]
    if parsed_args.json:
        _emit({'quiver': encode_quiver(quiver), 'dimension': list(e), 'orbits': [
            {'index': index, 'orbit': encode_orbit(label), 'codimension': codimension,
             'marked': label == marked}
            for index, (label, codimension) in enumerate(zip(orbits, codimensions))]},
              parsed_args, writer)
        return
    table = pd.DataFrame(
        data=[[str(label), codimension, '*' if label == marked else '']
              for label, codimension in zip(orbits, codimensions)],
        columns=['orbit', 'codimension', 'marked'])
    print('{} orbits of dimension vector {} on {}'.format(len(orbits), e, quiver))
    print(table.to_string())


def cmd_compute(parsed_args, stage: Stage, reader: DocumentReader, writer: DocumentWriter):
    quiver = _read_quiver(parsed_args, reader)
    e = parse_dimension(parsed_args.dim, quiver)
    stage.current = 'orbits'
    label = parse_orbit(reader.read_argument(parsed_args.orbit), quiver, e)
    stage.current = 'partition'
    partition = None
    if parsed_args.partition != 'auto':
        partition = parse_partition(reader.read_argument(parsed_args.partition), quiver)
    schur = parsed_args.basis in ('schur', 'both')
    stage.current = 'expansion'
    with _TIME.measure('compute.{}'.format(next(_RUNS))) as timer:
        result = compute(quiver, e, label, partition, parsed_args.form,
                         prune=not parsed_args.no_prune, schur=schur)
        verified = None
        if parsed_args.verify:
            stage.current = 'verification'
            verified = verify(quiver, e, label, result.provenance.partition,
                              prune=not parsed_args.no_prune)
    document = {
        'quiver': encode_quiver(quiver),
        'dimension': list(e),
        'orbit': encode_orbit(result.provenance.label),
        'form': result.provenance.form,
        'partition': encode_partition(result.provenance.partition),
        'resolution_pair': encode_pair(result.provenance.pair),
        'degree': result.degree}
    if parsed_args.basis in ('chern', 'both'):
        document['chern'] = encode_chern(result.chern)
        document['chern_text'] = str(result.chern)
    if schur:
        document['schur'] = encode_schur(result.schur)
        document['schur_text'] = str(result.schur)
        negative = positivity_report(result)
        document['positivity'] = {
            'negative_terms': [[[list(_) for _ in key], c] for key, c in negative],
            'all_nonnegative': not negative}
    if verified is not None:
        document['verified'] = list(verified)
    if parsed_args.timing:
        document['timing'] = {'seconds': timer.elapsed}
    _LOG.info('orbit %s computed in %fs', label, timer.elapsed)
    _emit(document, parsed_args, writer)


def cmd_check(parsed_args, stage: Stage, reader: DocumentReader, writer: DocumentWriter):
    stage.current = 'verification'
    _, failed = run_suite(parsed_args.suite, jobs=parsed_args.jobs)
    if failed:
        sys.exit(EXIT_MISMATCH)


COMMANDS = {'roots': cmd_roots, 'orbits': cmd_orbits, 'compute': cmd_compute, 'check': cmd_check}


def _add_quiver_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--quiver', '-q', metavar='document', type=str, default=None,
                        help='quiver as a JSON file path or inline JSON object with "vertices",'
                        ' "arrows" and optionally "dynkin_labelling"')


def _add_output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--output', '-o', metavar='path', type=str, default=None,
                        help='write the JSON document to a file instead of stdout')


def parse_args(args=None):
    """Parse commandline arguments of quiverpoly CLI."""

    parser = argparse.ArgumentParser(
        prog=PROG_NAME,
        description='Equivariant classes of orbit closures of Dynkin quiver representations.',
        epilog=COPYRIGHT_NOTICE, formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    roots = subparsers.add_parser('roots', help='list positive roots',
                                  formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    _add_quiver_args(roots)
    roots.add_argument('--type', '-t', metavar='name', type=str, default=None,
                       help='Dynkin type such as A3, D4 or E6, oriented i->j for edges i<j')
    roots.add_argument('--json', action='store_true', help='print a JSON document')
    _add_output_args(roots)

    orbits = subparsers.add_parser('orbits', help='list orbits of a dimension vector',
                                   formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    _add_quiver_args(orbits)
    orbits.add_argument('--dim', '-e', metavar='e1,e2,...', type=str, required=True,
                        help='dimension vector')
    orbits.add_argument('--mark', metavar='orbit', type=str, default=None,
                        help='orbit to mark in the listing, as [[root, m], ...] pairs')
    orbits.add_argument('--jobs', '-j', metavar='count', type=int, default=1,
                        help='number of processes evaluating codimensions')
    orbits.add_argument('--json', action='store_true', help='print a JSON document')
    _add_output_args(orbits)

    compute_ = subparsers.add_parser('compute', help='compute the class of an orbit closure',
                                     formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    _add_quiver_args(compute_)
    compute_.add_argument('--dim', '-e', metavar='e1,e2,...', type=str, required=True,
                          help='dimension vector')
    compute_.add_argument('--orbit', '-m', metavar='selector', type=str, required=True,
                          help='index into the orbit listing, or [[root, m], ...] pairs')
    compute_.add_argument('--form', '-f', choices=FORM_NAMES, default=DEFAULT_FORM,
                          help='closed formula used for the computation')
    compute_.add_argument('--partition', '-p', metavar='document', type=str, default='auto',
                          help='directed partition as a list of blocks of roots, or "auto"')
    compute_.add_argument('--basis', '-b', choices=('chern', 'schur', 'both'), default='chern',
                          help='basis of the emitted polynomial')
    compute_.add_argument('--verify', action='store_true',
                          help='compare all forms and a second partition before emitting')
    compute_.add_argument('--no-prune', action='store_true',
                          help='expand without removing inert variables')
    compute_.add_argument('--timing', action='store_true', help='report wall-clock time')
    _add_output_args(compute_)

    check = subparsers.add_parser('check', help='run golden fixtures and oracle checks',
                                  formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    check.add_argument('--suite', '-s', choices=suite_names(), required=True,
                       help='suite of checks to run')
    check.add_argument('--jobs', '-j', metavar='count', type=int, default=1,
                       help='number of processes running orbit sweeps')

    return parser.parse_args(args)


def main(args=None):
    """Parse commandline arguments and execute quiverpoly accordingly."""

    parsed_args = parse_args(args)
    stage = Stage()
    reader = DocumentReader()
    writer = DocumentWriter()
    try:
        COMMANDS[parsed_args.command](parsed_args, stage, reader, writer)
    except QuiverPolyError as err:
        print('{}: {} stage failed: {}'.format(PROG_NAME, stage, err), file=sys.stderr)
        _LOG.debug('%s failed', parsed_args.command, exc_info=True)
        sys.exit(err.exit_code)
    except argparse.ArgumentTypeError as err:
        print('{}: {}'.format(PROG_NAME, err), file=sys.stderr)
        sys.exit(2)
