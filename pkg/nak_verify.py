import itertools
from dataclasses import dataclass, field
from multiprocessing import Process, Pipe
from typing import Callable

from nak_config import Config
from nak_errors import UnknownClaim, WitnessMismatch, WorkerFailed
from nak_algebra import Shape, validate_kupisch, enumerate_difference_classes, shift, num_proj_inj
from nak_homalg import MAX_STEPS, all_indecomposables, is_injective
from nak_invariants import (
    INF,
    domdim_algebra,
    domdim_module,
    gorenstein_dimension,
    fdomdim,
    delta,
    global_dimension,
    to_json_value,
)
from nak_gendo import validate_morita, gendo_summary, domdim_morita_formula, domdim_w2_formula
from nak_record import Recorder, jsonable

"""claims"""


class Claim:
    claim_id = ''
    shape = Shape.Cyclic

    def applies(self, record: dict) -> bool:
        return record['shape'] == self.shape.value

    def violations(self, record: dict) -> list:
        raise NotImplementedError


class BoundClaim(Claim):
    def __init__(self, claim_id: str, key: str, bound: Callable[[dict], int],
                 condition: Callable[[dict], bool] = None, shape: Shape = Shape.Cyclic):
        self.claim_id = claim_id
        self.key = key  # record column that is bounded
        self.bound = bound
        self.condition = condition if condition else (lambda record: not record['selfinjective'])
        self.shape = shape

    def applies(self, record: dict) -> bool:
        return super().applies(record) and self.condition(record)

    def violations(self, record: dict) -> list:
        computed = record[self.key]
        bound = self.bound(record)
        if computed <= bound:
            return []
        return [{'kupisch': record['kupisch'], 'claim': self.claim_id, 'key': self.key,
                 'computed': to_json_value(computed), 'bound': bound}]


class InvarianceClaim(Claim):
    """domdim agrees on c, c+n, c+2n, at algebra level and for every non-injective (i, k mod n)."""
    claim_id = 'invariance'

    def violations(self, record: dict) -> list:
        check = record['invariance']
        found = []
        if len(set(check['domdim_shifts'])) > 1:
            found.append({'kupisch': record['kupisch'], 'claim': self.claim_id, 'key': 'domdim',
                          'computed': [to_json_value(v) for v in check['domdim_shifts']], 'bound': 'equal'})
        for vertex, residue, values in check['module_mismatches']:
            found.append({'kupisch': record['kupisch'], 'claim': self.claim_id, 'key': f"module({vertex},{residue})",
                          'computed': [to_json_value(v) for v in values], 'bound': 'equal'})
        return found


def _two_n_minus(offset: int):
    return lambda record: 2 * record['n'] - offset


CLAIMS = {
    'domdim': [BoundClaim('domdim', 'domdim', _two_n_minus(2))],
    'fdomdim': [BoundClaim('fdomdim', 'fdomdim', _two_n_minus(2))],
    'delta': [BoundClaim('delta', 'delta', _two_n_minus(1))],
    'best_result': [BoundClaim('best_result', 'domdim', lambda record: 2 * record['num_proj_inj'],
                               condition=lambda record: not record['selfinjective'] and record['domdim'] >= 2)],
    'linear': [
        BoundClaim('linear', 'gldim', lambda record: record['n'] - 1, shape=Shape.Linear),
        BoundClaim('linear', 'delta', lambda record: record['n'] - 1, shape=Shape.Linear),
        BoundClaim('linear', 'domdim', lambda record: record['num_proj_inj'], shape=Shape.Linear),
    ],
    'invariance': [InvarianceClaim()],
    'formulas': [],  # swept over Morita specs by `verify_formulas`, not per class
}


def register_claim(claim_id: str, claims: list):
    CLAIMS[claim_id] = list(claims)


def resolve_claims(claim_ids) -> dict:
    claim_ids = tuple(claim_ids)
    for claim_id in claim_ids:
        if claim_id not in CLAIMS:
            raise UnknownClaim(claim_id, sorted(CLAIMS))
    return {claim_id: CLAIMS[claim_id] for claim_id in claim_ids}


"""per-class records"""


def invariance_check(alg, samples_per_class: int = 2, max_steps: int = MAX_STEPS) -> dict:
    family = [alg] + [shift(alg, t) for t in range(1, samples_per_class + 1)]
    n = alg.n
    table = {}
    for member in family:
        for module in all_indecomposables(member):
            if is_injective(member, module):
                continue
            key = (module.vertex, module.length % n)
            table.setdefault(key, set()).add(domdim_module(member, module, max_steps))
    return {
        'domdim_shifts': [domdim_algebra(member, max_steps) for member in family],
        'gorenstein_shifts': [gorenstein_dimension(member, max_steps) for member in family],
        'module_mismatches': [[i, r, sorted(values)] for (i, r), values in sorted(table.items()) if len(values) > 1],
    }


def compute_record(kupisch: tuple, shape: str, needs: tuple = (), samples_per_class: int = 2,
                   max_steps: int = MAX_STEPS) -> dict:
    alg = validate_kupisch(kupisch, shape)
    record = {
        'n': alg.n,
        'kupisch': alg.c,
        'shape': alg.shape.value,
        'selfinjective': alg.is_cyclic and len(set(alg.c)) == 1,
        'domdim': domdim_algebra(alg, max_steps),
        'gorenstein': gorenstein_dimension(alg, max_steps),
        'fdomdim': fdomdim(alg, max_steps),
        'delta': delta(alg, max_steps),
        'num_proj_inj': num_proj_inj(alg),
    }
    if alg.shape is Shape.Linear:
        record['gldim'] = global_dimension(alg, max_steps)
    elif 'fdomdim' in needs:
        record['fdomdim_shifted'] = fdomdim(shift(alg, 1), max_steps)
    if 'invariance' in needs and alg.shape is Shape.Cyclic:
        record['invariance'] = invariance_check(alg, samples_per_class, max_steps)
    return record


"""workers"""


class SweepWorker(Process):
    def __init__(self, worker_pipe: Pipe, result_pipe: Pipe, worker_id: int, needs: tuple, args: Config):
        super().__init__()
        self.recv_pipe = worker_pipe[0]
        self.send_pipe = result_pipe[1]
        self.worker_id = worker_id
        self.needs = needs
        self.args = args

    def run(self):
        args = self.args
        worker_id = self.worker_id

        while True:
            """Worker receive a chunk of classes"""
            items = self.recv_pipe.recv()
            if items is None:
                break

            """Worker send the records back"""
            try:
                records = [compute_record(kupisch, shape, self.needs, args.shifts, args.max_steps)
                           for kupisch, shape in items]
                self.send_pipe.send((worker_id, records))
            except Exception as error:
                self.send_pipe.send((worker_id, f"{type(error).__name__}: {error}"))


class WorkerPool:
    def __init__(self, needs: tuple, args: Config):
        self.num_workers = args.num_workers
        self.worker_pipes = [Pipe(duplex=False) for _ in range(self.num_workers)]
        self.result_pipes = [Pipe(duplex=False) for _ in range(self.num_workers)]  # one writer per pipe
        self.workers = [SweepWorker(self.worker_pipes[worker_id], self.result_pipes[worker_id], worker_id, needs, args)
                        for worker_id in range(self.num_workers)]
        [worker.start() for worker in self.workers]

    def map(self, items: list) -> list:
        chunks = [items[worker_id::self.num_workers] for worker_id in range(self.num_workers)]
        for worker_id, chunk in enumerate(chunks):
            self.worker_pipes[worker_id][1].send(chunk)

        records = []
        for result_pipe in self.result_pipes:
            worker_id, result = result_pipe[0].recv()
            if isinstance(result, str):
                self.close()
                raise WorkerFailed(worker_id, result)
            records.extend(result)
        return records

    def close(self):
        for worker_id, worker in enumerate(self.workers):
            if worker.is_alive():
                self.worker_pipes[worker_id][1].send(None)
        [worker.join(timeout=5) for worker in self.workers]
        [worker.terminate() for worker in self.workers if worker.is_alive()]


"""report"""


@dataclass
class VerificationReport:
    n: int
    classes_checked: int = 0
    specs_checked: int = 0
    violations: list = field(default_factory=list)
    observations: list = field(default_factory=list)
    rows: list = field(default_factory=list)

    def add_record(self, record: dict, claims: dict):
        self.classes_checked += 1
        self.rows.append(record)
        for claim_list in claims.values():
            for claim in claim_list:
                if claim.applies(record):
                    self.violations.extend(claim.violations(record))

        if record.get('fdomdim_shifted', record['fdomdim']) != record['fdomdim']:
            self.observations.append({'kupisch': record['kupisch'], 'observation': 'fdomdim_varies',
                                      'values': [record['fdomdim'], record['fdomdim_shifted']]})
        if 'invariance' in record and len(set(record['invariance']['gorenstein_shifts'])) > 1:
            self.observations.append({'kupisch': record['kupisch'], 'observation': 'gorenstein_varies',
                                      'values': record['invariance']['gorenstein_shifts']})

    def merge(self, other: 'VerificationReport') -> 'VerificationReport':
        return VerificationReport(
            n=max(self.n, other.n),
            classes_checked=self.classes_checked + other.classes_checked,
            specs_checked=self.specs_checked + other.specs_checked,
            violations=self.violations + other.violations,
            observations=self.observations + other.observations,
            rows=self.rows + other.rows,
        )

    def _cyclic_rows(self, n: int) -> list:
        return [row for row in self.rows if row['n'] == n and row['shape'] == Shape.Cyclic.value]

    @property
    def ns(self) -> list:
        return sorted({row['n'] for row in self.rows})

    def max_domdim(self, n: int):
        values = [row['domdim'] for row in self._cyclic_rows(n) if not row['selfinjective']]
        return max(values) if values else None

    def extremal(self, n: int) -> list:
        max_domdim = self.max_domdim(n)
        return sorted(tuple(row['kupisch']) for row in self._cyclic_rows(n)
                      if not row['selfinjective'] and row['domdim'] == max_domdim)

    def histogram(self, n: int) -> dict:
        counts = {}
        for row in self._cyclic_rows(n):
            key = to_json_value(row['domdim'])
            counts[key] = counts.get(key, 0) + 1
        return counts

    def csv_rows(self) -> list:
        return sorted(self.rows, key=lambda row: (row['shape'], row['n'], tuple(row['kupisch'])))

    def to_dict(self) -> dict:
        def sort_key(item):
            return repr(jsonable(item))

        return jsonable({
            'n': self.n,
            'classes_checked': self.classes_checked,
            'specs_checked': self.specs_checked,
            'violations': sorted(self.violations, key=sort_key),
            'observations': sorted(self.observations, key=sort_key),
            'histogram': {n: self.histogram(n) for n in self.ns},
            'max_domdim': {n: self.max_domdim(n) for n in self.ns},
            'extremal': {n: self.extremal(n) for n in self.ns},
        })


"""sweeps"""


def _run_records(items: list, needs: tuple, args: Config, pool: WorkerPool = None) -> list:
    if pool is not None:
        return pool.map(items)
    return [compute_record(kupisch, shape, needs, args.shifts, args.max_steps) for kupisch, shape in items]


def _class_items(n: int, claims: dict, args: Config) -> list:
    shapes = {claim.shape for claim_list in claims.values() for claim in claim_list}
    items = []
    if Shape.Cyclic in shapes:
        items += [(alg.c, Shape.Cyclic.value) for alg in
                  enumerate_difference_classes(n, Shape.Cyclic, args.window_factor, args.n_cap)]
    if Shape.Linear in shapes:
        items += [(alg.c, Shape.Linear.value) for alg in enumerate_difference_classes(n, Shape.Linear, n_cap=args.n_cap)]
    return items


def verify_bounds(n_max: int, claims=None, args: Config = None, recorder: Recorder = None,
                  n_min: int = 2) -> VerificationReport:
    args = args if args else Config(n_max=n_max)
    args.check_n(n_max)
    claims = resolve_claims(claims if claims else args.claims)
    needs = tuple(claims)
    recorder = recorder if recorder else Recorder(if_print=args.if_print, warn_seconds=args.warn_seconds)

    report = VerificationReport(n=n_max)
    pool = WorkerPool(needs, args) if args.num_workers > 1 else None
    try:
        for n in range(n_min, n_max + 1):
            num_violations = len(report.violations)
            items = _class_items(n, claims, args)
            for record in _run_records(items, needs, args, pool):
                report.add_record(record, claims)
            recorder.log_print(n, len(items), len(report.violations) - num_violations, report.max_domdim(n))
    finally:
        pool.close() if pool else None
    return report


def verify_class_invariance(n: int, samples_per_class: int = 2, args: Config = None,
                            recorder: Recorder = None) -> VerificationReport:
    args = args if args else Config(n_max=n)
    args.shifts = samples_per_class
    return verify_bounds(n, ('invariance',), args, recorder, n_min=n)


def scan_extremal(n: int, args: Config = None, recorder: Recorder = None) -> list:
    """Cyclic classes with n simples and dominant dimension 2n-2."""
    args = args if args else Config(n_max=n)
    report = verify_bounds(n, ('domdim',), args, recorder, n_min=n)
    witnesses = []
    for row in report.csv_rows():
        if row['selfinjective'] or row['domdim'] != 2 * n - 2:
            continue
        if row['num_proj_inj'] != n - 1:
            raise WitnessMismatch(tuple(row['kupisch']), row['num_proj_inj'], n - 1)
        witnesses.append(tuple(row['kupisch']))
    return witnesses


def _special_sets(base_n: int):
    for r in range(1, base_n + 1):
        yield from itertools.combinations(range(base_n), r)


def verify_formulas(base_n_max: int, args: Config = None, recorder: Recorder = None) -> VerificationReport:
    """Gendo-symmetric specs (w = n+1): four-way domdim and three-way Gorenstein agreement.
    w = 2 mod n specs: the w = 2 corollary against the Morita infimum."""
    args = args if args else Config()
    recorder = recorder if recorder else Recorder(if_print=args.if_print, warn_seconds=args.warn_seconds)
    report = VerificationReport(n=base_n_max)

    for base_n in range(1, base_n_max + 1):
        num_violations = len(report.violations)
        num_specs = report.specs_checked
        for points in _special_sets(base_n):
            spec = validate_morita(base_n, base_n + 1, points)
            summary = gendo_summary(spec, args.max_steps)
            report.specs_checked += 1
            if not summary['agree']:
                report.violations.append({'claim': 'formulas', 'spec': spec.to_dict(), 'computed': summary})

        for loewy in range(2, 2 * base_n + 3):
            if loewy % base_n != 2 % base_n:
                continue
            for points in _special_sets(base_n):
                spec = validate_morita(base_n, loewy, points)
                report.specs_checked += 1
                w2, morita = domdim_w2_formula(spec), domdim_morita_formula(spec)
                if w2 != morita:
                    report.violations.append({'claim': 'formulas', 'spec': spec.to_dict(),
                                              'computed': {'domdim_w2': w2, 'domdim_formula': morita}})
        recorder.log_line(f"Formulas: base_n {base_n:>2}  specs {report.specs_checked - num_specs:>5}  "
                          f"viol {len(report.violations) - num_violations:>3}")
    return report


def verify(args: Config, recorder: Recorder = None) -> VerificationReport:
    args.init_before_run()
    recorder = recorder if recorder else Recorder(if_print=args.if_print, warn_seconds=args.warn_seconds)
    recorder.warn_caps(args.n_max, Config().n_max)

    claims = resolve_claims(args.claims)
    class_claims = tuple(claim_id for claim_id in claims if claim_id != 'formulas')
    report = VerificationReport(n=args.n_max)
    if class_claims:
        report = report.merge(verify_bounds(args.n_max, class_claims, args, recorder))
    if 'formulas' in claims:
        report = report.merge(verify_formulas(min(args.gendo_base_max, args.n_max), args, recorder))
    recorder.print_used_time()
    return report
