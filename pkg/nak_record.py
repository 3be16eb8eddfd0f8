import sys
import json
import time
from enum import Enum

import numpy as np
import pandas as pd

CSV_COLUMNS = ['n', 'kupisch', 'selfinjective', 'domdim', 'gorenstein', 'fdomdim', 'delta', 'num_proj_inj']


def skip_method_if_print_disabled(method):
    def wrapper(self, *args, **kwargs):
        if not self.if_print:
            return None
        return method(self, *args, **kwargs)

    return wrapper


class Recorder:
    """Progress lines for sweeps. Writes to stderr so stdout stays machine-readable."""

    def __init__(self, if_print: bool = True, warn_seconds: float = 60, stream=None):
        self.if_print = if_print
        self.warn_seconds = warn_seconds
        self.stream = stream if stream is not None else sys.stderr

        '''Sweep log'''
        self.if_header = False
        self.if_warned = False
        self.if_caps_raised = False

        '''Timing module'''
        self.start_time = time.time()

    @property
    def used_time(self) -> float:
        return time.time() - self.start_time

    def _print(self, line: str):
        print(line, file=self.stream, flush=True)

    @skip_method_if_print_disabled
    def warn_caps(self, n_max: int, default_n_max: int, c_max: int = None):
        if n_max > default_n_max:
            self.if_caps_raised = True
            self._print(f"| Warning: n_max={n_max} is above the default {default_n_max}"
                        f"{'' if c_max is None else f', c_i <= {c_max}'}. Class counts grow quickly.")

    @skip_method_if_print_disabled
    def log_print(self, n: int, classes: int, violations: int, max_domdim):
        if not self.if_header:
            self.if_header = True
            self._print(f"| {'n':>3}  {'classes':>8}  {'viol':>5}  {'maxD':>5}  {'sec':>7}")
        max_domdim = 'inf' if max_domdim == np.inf else ('-' if max_domdim is None else int(max_domdim))
        self._print(f"| {n:>3}  {classes:>8}  {violations:>5}  {max_domdim:>5}  {self.used_time:>7.1f}")

        if self.if_caps_raised and not self.if_warned and self.used_time > self.warn_seconds:
            self.if_warned = True
            self._print(f"| Warning: sweep has run {self.used_time:.0f} sec with raised caps")

    @skip_method_if_print_disabled
    def log_line(self, text: str):
        self._print(f"| {text}")

    @skip_method_if_print_disabled
    def print_used_time(self):
        self._print(f"| UsedTime: {self.used_time:>7.1f}")


'''emission'''


def jsonable(obj):
    """Plain JSON types with INF as "inf"."""
    if isinstance(obj, dict):
        return {str(key): jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [jsonable(value) for value in obj]
        return sorted(items, key=repr) if isinstance(obj, (set, frozenset)) else items
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (float, np.floating)):
        if obj == np.inf:
            return "inf"
        return int(obj) if float(obj).is_integer() else float(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True)


def rows_to_frame(rows: list, columns: list = None) -> pd.DataFrame:
    rows = [jsonable(row) for row in rows]
    for row in rows:
        if isinstance(row.get('kupisch'), list):
            row['kupisch'] = ','.join(str(c) for c in row['kupisch'])
    return pd.DataFrame(rows, columns=columns)


def save_csv(rows: list, csv_path: str, columns: list = None):
    rows_to_frame(rows, columns or CSV_COLUMNS).to_csv(csv_path, index=False)


def pretty(obj) -> str:
    """Human-readable table of a JSON-like result."""
    obj = jsonable(obj)
    if isinstance(obj, list) and obj and all(isinstance(row, dict) for row in obj):
        return rows_to_frame(obj).to_string(index=False)
    if isinstance(obj, dict):
        items = [(key, json.dumps(value, sort_keys=True) if isinstance(value, (dict, list)) else value)
                 for key, value in sorted(obj.items())]
        return pd.DataFrame(items, columns=['key', 'value']).to_string(index=False)
    return str(obj)
