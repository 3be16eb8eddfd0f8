import os
import inspect

from nak_errors import LimitExceeded


class Config:
    def __init__(self, n_max: int = 6, num_workers: int = 1, claims=None, csv_path: str = None):
        '''Arguments for enumeration'''
        self.n_cap = 8  # largest number of simples accepted by sweeps. Class count grows quickly above it
        self.n_max = n_max  # sweep every n in 2..n_max. `n_max=5` is the CI setting, 6 is the extended mode
        self.window_factor = 2  # representatives use 2 <= c_i <= window_factor * n + 1
        self.stability_factor = 3  # stability check re-enumerates with c_i <= stability_factor * n
        self.max_steps = 4096  # resolution steps before StepLimitReached. State spaces are far smaller

        '''Arguments for verification'''
        self.claims = tuple(claims) if claims else ('domdim', 'fdomdim', 'delta', 'best_result')
        self.shifts = 2  # class invariance compares c, c+n, ..., c+shifts*n
        self.gendo_base_max = 6  # formula sweep covers gendo-symmetric specs with base_n <= gendo_base_max

        '''Arguments for workers'''
        self.num_workers = num_workers  # worker processes for `verify`. 1 means run in the calling process
        self.warn_seconds = 60  # print a wall-clock warning when an overridden cap runs longer

        '''Arguments for emission'''
        self.csv_path = csv_path  # per-class table for `verify`. None means no CSV
        self.if_pretty = False  # human-readable table instead of JSON
        self.if_print = True  # progress lines on stderr

    def init_before_run(self):
        if self.n_max > self.n_cap:
            raise LimitExceeded(self.n_max, self.n_cap)
        self.num_workers = max(1, int(self.num_workers))

        '''set directory for the csv output'''
        if self.csv_path:
            csv_dir = os.path.dirname(os.path.abspath(self.csv_path))
            os.makedirs(csv_dir, exist_ok=True)

    def check_n(self, n: int):
        if n > self.n_cap:
            raise LimitExceeded(n, self.n_cap)


def build_config(**kwargs) -> Config:
    """Build a Config from CLI keyword arguments.

    Constructor arguments go through `kwargs_filter`; any other keyword naming an
    existing attribute overrides the default. Unknown keys are dropped.
    """
    args = Config(**kwargs_filter(Config.__init__, kwargs))
    for key, value in kwargs.items():
        if value is not None and hasattr(args, key):
            setattr(args, key, value)
    return args


def kwargs_filter(function, kwargs: dict) -> dict:
    sign = inspect.signature(function).parameters.values()
    sign = {val.name for val in sign}
    common_args = sign.intersection(kwargs.keys())
    return {key: kwargs[key] for key in common_args if kwargs[key] is not None}  # filtered kwargs
