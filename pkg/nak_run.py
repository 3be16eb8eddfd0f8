"""
Command-line interface for Nakayama algebra invariants.

Usage:
    python nak_run.py inspect --kupisch 2,2,3
    python nak_run.py resolve --kupisch 2,2,3 --module 0,2 --direction inj
    python nak_run.py domdim --kupisch 4,5,5 --module 0,3
    python nak_run.py gendo --base-n 2 --loewy 3 --special 0
    python nak_run.py verify --n-max 5 --claims domdim,fdomdim,delta --jobs 4 --csv out.csv
"""
import sys
import functools

import click

from nak_config import Config, build_config
from nak_errors import NakayamaError, NakayamaInternalError
from nak_algebra import (
    Shape,
    validate_kupisch,
    classify,
    f_map,
    g_map,
    difference_class,
    proj_injective_vertices,
)
from nak_homalg import (
    MAX_STEPS,
    Direction,
    Indecomposable,
    check_module,
    resolve as resolve_trace,
    injective_coresolution,
    projective_module,
    trace_to_dict,
)
from nak_invariants import (
    domdim_module,
    domdim_algebra,
    injective_dimension,
    gorenstein_dimension,
    fdomdim as fdomdim_value,
    fdomdim_degenerate,
    delta as delta_value,
    delta_horizon,
    invariant_report,
    to_json_value,
)
from nak_gendo import validate_morita, gendo_summary, endomorphism_kupisch, family_example, domdim_w2_formula
from nak_verify import verify as verify_sweep, scan_extremal
from nak_record import Recorder, dumps, pretty, save_csv

EXIT_VIOLATIONS = 3
RESOLVE_COLUMNS = ['t', 'term', 'state']
SCAN_COLUMNS = ['n', 'kupisch', 'domdim']


def parse_ints(ctx, param, value):
    if value is None:
        return None
    try:
        return tuple(int(item) for item in str(value).replace(' ', '').split(',') if item != '')
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def parse_module(ctx, param, value):
    values = parse_ints(ctx, param, value)
    if values is not None and len(values) != 2:
        raise click.BadParameter(f"expected i,k, got {value!r}")
    return values


def parse_claims(ctx, param, value):
    if value is None:
        return None
    return tuple(item.strip() for item in value.split(',') if item.strip())


def handle_errors(command):
    """Map library errors to exit codes without a stack trace."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except (NakayamaError, NakayamaInternalError) as error:
            click.echo(f"Error: {error}", err=True)
            ctx.exit(getattr(error, 'exit_code', 1))

    return wrapper


def emit(obj, if_pretty: bool = False):
    click.echo(pretty(obj) if if_pretty else dumps(obj))


def kupisch_options(command):
    command = click.option('--shape', type=click.Choice([shape.value for shape in Shape]), default='cyclic',
                           show_default=True, help='Quiver shape')(command)
    command = click.option('--kupisch', required=True, callback=parse_ints,
                           help='Kupisch series, e.g. 2,2,3')(command)
    return command


def output_options(command):
    command = click.option('--pretty', 'if_pretty', is_flag=True, help='Human-readable table')(command)
    return command


def csv_option(help_text: str):
    return click.option('--csv', 'csv_path', type=click.Path(dir_okay=False), default=None, help=help_text)


def state_text(state) -> str:
    return ','.join(str(value) for value in state)


@click.group()
def cli():
    """Homological invariants of Nakayama algebras."""


@cli.command()
@kupisch_options
@output_options
@handle_errors
def inspect(kupisch, shape, if_pretty):
    """Left lengths, classification and projective-injectives."""
    alg = validate_kupisch(kupisch, shape)
    classification = classify(alg)
    emit({
        'kupisch': alg.c,
        'shape': alg.shape.value,
        'n': alg.n,
        'd': alg.d,
        'selfinjective': classification.selfinjective,
        'symmetric': classification.symmetric,
        'proj_injectives': proj_injective_vertices(alg),
        'f': [f_map(alg, x) for x in range(alg.n)],
        'g': [g_map(alg, x) for x in range(alg.n)],
        'difference_class': difference_class(alg).residues,
    }, if_pretty)


@cli.command()
@kupisch_options
@click.option('--module', required=True, callback=parse_module, help='Module e_iA/e_iJ^k as i,k')
@click.option('--direction', type=click.Choice([direction.value for direction in Direction]), default='proj',
              show_default=True)
@click.option('--max-steps', type=int, default=MAX_STEPS, show_default=True,
              help='Largest number of distinct states. Hitting it exits 2 and prints no trace')
@csv_option('One row per term: t, term, state')
@output_options
@handle_errors
def resolve(kupisch, shape, module, direction, max_steps, csv_path, if_pretty):
    """Minimal projective resolution or injective coresolution of a module."""
    alg = validate_kupisch(kupisch, shape)
    module = check_module(alg, Indecomposable(*module))
    trace = resolve_trace(alg, module, Direction(direction), max_steps)
    if csv_path:
        rows = [{'t': 0, 'term': trace.terms[0], 'state': ''}]
        rows += [{'t': t, 'term': term, 'state': state_text(state)}
                 for t, (term, state) in enumerate(zip(trace.terms[1:], trace.states), start=1)]
        save_csv(rows, csv_path, RESOLVE_COLUMNS)
    emit(trace_to_dict(trace), if_pretty)


@cli.command()
@kupisch_options
@click.option('--module', default=None, callback=parse_module, help='Module e_iA/e_iJ^k as i,k')
@click.option('--explain', 'if_explain', is_flag=True, help='Add the witnessing coresolution trace')
@output_options
@handle_errors
def domdim(kupisch, shape, module, if_explain, if_pretty):
    """Dominant dimension of the algebra or of one module."""
    alg = validate_kupisch(kupisch, shape)
    if module is not None:
        witness = check_module(alg, Indecomposable(*module))
        value = domdim_module(alg, witness)
    else:
        value = domdim_algebra(alg)
        witness = min((projective_module(alg, i) for i in range(alg.n)), key=lambda m: domdim_module(alg, m))
    result = {'domdim': to_json_value(value)}
    if if_explain:
        result['trace'] = trace_to_dict(injective_coresolution(alg, witness))
    emit(result, if_pretty)


@cli.command()
@kupisch_options
@click.option('--module', default=None, callback=parse_module, help='Injective dimension of e_iA/e_iJ^k instead')
@click.option('--explain', 'if_explain', is_flag=True, help='Add the coresolution traces of the projectives')
@output_options
@handle_errors
def gorenstein(kupisch, shape, module, if_explain, if_pretty):
    """Injective dimension of the right regular module."""
    alg = validate_kupisch(kupisch, shape)
    if module is not None:
        module = check_module(alg, Indecomposable(*module))
        result = {'injdim': to_json_value(injective_dimension(alg, module))}
        modules = [module]
    else:
        result = {'gorenstein': to_json_value(gorenstein_dimension(alg))}
        modules = [projective_module(alg, i) for i in range(alg.n)]
    if if_explain:
        result['traces'] = [trace_to_dict(injective_coresolution(alg, m)) for m in modules]
    emit(result, if_pretty)


@cli.command()
@kupisch_options
@output_options
@handle_errors
def fdomdim(kupisch, shape, if_pretty):
    """Finitistic dominant dimension."""
    alg = validate_kupisch(kupisch, shape)
    emit({'fdomdim': fdomdim_value(alg), 'degenerate': fdomdim_degenerate(alg)}, if_pretty)


@cli.command()
@kupisch_options
@output_options
@handle_errors
def delta(kupisch, shape, if_pretty):
    """First nonvanishing Ext degree between D(A) and A (selfinjective: sup of phi)."""
    alg = validate_kupisch(kupisch, shape)
    emit({'delta': to_json_value(delta_value(alg)), 'horizon': delta_horizon(alg)}, if_pretty)


@cli.command()
@kupisch_options
@output_options
@handle_errors
def report(kupisch, shape, if_pretty):
    """All invariants of one algebra."""
    alg = validate_kupisch(kupisch, shape)
    emit(invariant_report(alg).to_dict(), if_pretty)


@cli.command()
@click.option('--base-n', required=True, type=int, help='Simples of the selfinjective base')
@click.option('--loewy', required=True, type=int, help='Loewy length w of the base')
@click.option('--special', required=True, callback=parse_ints, help='Special points, e.g. 0,1')
@click.option('--emit-kupisch', 'if_emit_kupisch', is_flag=True, help='Print only the Kupisch series of End(M)')
@output_options
@handle_errors
def gendo(base_n, loewy, special, if_emit_kupisch, if_pretty):
    """Closed formulas against direct computation for End_A(A + sum e_xA/e_xJ^{w-1})."""
    spec = validate_morita(base_n, loewy, special)
    if if_emit_kupisch:
        click.echo(','.join(str(c) for c in endomorphism_kupisch(spec).c))
        return
    emit(gendo_summary(spec), if_pretty)


@cli.command()
@click.option('--target', required=True, type=int, help='Dominant dimension to construct, at least 2')
@output_options
@handle_errors
def family(target, if_pretty):
    """Nakayama algebra of a prescribed dominant dimension."""
    spec = family_example(target)
    alg = endomorphism_kupisch(spec)
    emit({
        'spec': spec.to_dict(),
        'domdim_formula': domdim_w2_formula(spec),
        'domdim_direct': to_json_value(domdim_algebra(alg)),
        'endomorphism_kupisch': alg.c,
    }, if_pretty)


def sweep_options(command):
    command = click.option('--n-cap', type=int, default=None, help='Raise the largest accepted n')(command)
    command = click.option('--jobs', 'num_workers', type=int, default=1, show_default=True,
                           help='Worker processes')(command)
    return command


@cli.command()
@click.option('--n-max', type=int, default=Config().n_max, show_default=True)
@click.option('--claims', default=None, callback=parse_claims,
              help='Comma-separated claims: domdim,fdomdim,delta,best_result,linear,invariance,formulas')
@csv_option('Per-class table')
@click.option('--quiet', is_flag=True, help='No progress lines on stderr')
@sweep_options
@output_options
@handle_errors
def verify(n_max, claims, csv_path, quiet, n_cap, num_workers, if_pretty):
    """Exhaustive check of the bounds over all difference classes. Exit 3 on violations."""
    args = build_config(n_max=n_max, claims=claims, csv_path=csv_path, num_workers=num_workers,
                        n_cap=n_cap, if_pretty=if_pretty, if_print=not quiet)
    recorder = Recorder(if_print=args.if_print, warn_seconds=args.warn_seconds)
    result = verify_sweep(args, recorder)
    if args.csv_path:
        save_csv(result.csv_rows(), args.csv_path)
    emit(result.to_dict(), args.if_pretty)
    if result.violations:
        click.get_current_context().exit(EXIT_VIOLATIONS)


@cli.command()
@click.option('--n', 'n', required=True, type=int, help='Number of simples')
@click.option('--quiet', is_flag=True, help='No progress lines on stderr')
@csv_option('One row per witness: n, kupisch, domdim')
@sweep_options
@output_options
@handle_errors
def scan(n, quiet, csv_path, n_cap, num_workers, if_pretty):
    """Cyclic classes attaining dominant dimension 2n-2."""
    args = build_config(n_max=n, num_workers=num_workers, n_cap=n_cap, csv_path=csv_path, if_print=not quiet)
    args.init_before_run()
    recorder = Recorder(if_print=args.if_print, warn_seconds=args.warn_seconds)
    witnesses = scan_extremal(n, args, recorder)
    if args.csv_path:
        save_csv([{'n': n, 'kupisch': kupisch, 'domdim': 2 * n - 2} for kupisch in witnesses],
                 args.csv_path, SCAN_COLUMNS)
    emit({'n': n, 'domdim': 2 * n - 2, 'witnesses': witnesses}, if_pretty)


def run(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        code = cli.main(args=argv, prog_name='nak_run', standalone_mode=False)
    except click.ClickException as error:
        error.show()
        return 1
    except click.Abort:
        return 1
    except (NakayamaError, NakayamaInternalError) as error:
        click.echo(f"Error: {error}", err=True)
        return getattr(error, 'exit_code', 1)
    return code if isinstance(code, int) else 0


if __name__ == '__main__':
    sys.exit(run())
