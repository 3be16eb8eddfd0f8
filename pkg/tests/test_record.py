import io

import numpy as np
import pandas as pd

from nak_algebra import Shape
from nak_record import CSV_COLUMNS, Recorder, jsonable, dumps, save_csv, pretty


def test_recorder_prints_header_once():
    stream = io.StringIO()
    recorder = Recorder(stream=stream)
    recorder.log_print(2, 3, 0, 2)
    recorder.log_print(3, 11, 0, np.inf)
    recorder.print_used_time()
    lines = stream.getvalue().splitlines()
    assert len(lines) == 4
    assert lines[0].split() == ['|', 'n', 'classes', 'viol', 'maxD', 'sec']
    assert lines[1].split()[:5] == ['|', '2', '3', '0', '2']
    assert lines[2].split()[4] == 'inf'
    assert lines[3].startswith('| UsedTime:')
    seconds = [float(line.split()[5]) for line in lines[1:3]]
    assert 0 <= seconds[0] <= seconds[1]


def test_recorder_silent():
    stream = io.StringIO()
    recorder = Recorder(if_print=False, stream=stream)
    recorder.warn_caps(9, 6)
    recorder.log_print(2, 3, 0, 2)
    recorder.log_line('hidden')
    assert stream.getvalue() == ''


def test_cap_warning():
    stream = io.StringIO()
    recorder = Recorder(stream=stream)
    recorder.warn_caps(7, 6)
    assert recorder.if_caps_raised
    assert 'n_max=7' in stream.getvalue()


def test_jsonable():
    assert jsonable({1: np.inf, 'a': {3, 1}, 'shape': Shape.Linear}) == {'1': 'inf', 'a': [1, 3], 'shape': 'linear'}
    assert jsonable([np.int64(2), np.float64(3.0), np.bool_(True)]) == [2, 3, True]
    assert dumps({'b': 1, 'a': np.inf}) == '{"a": "inf", "b": 1}'


def test_save_csv(tmp_path):
    rows = [{'n': 3, 'kupisch': (2, 2, 3), 'shape': 'cyclic', 'selfinjective': False, 'domdim': 3,
             'gorenstein': 3, 'fdomdim': 3, 'delta': 1, 'num_proj_inj': 2}]
    csv_path = tmp_path / 'classes.csv'
    save_csv(rows, str(csv_path))
    frame = pd.read_csv(csv_path)
    assert list(frame.columns) == CSV_COLUMNS
    assert frame.loc[0, 'kupisch'] == '2,2,3'
    assert frame.loc[0, 'domdim'] == 3


def test_pretty():
    text = pretty({'domdim': np.inf, 'kupisch': [2, 2, 3]})
    assert 'domdim' in text
    assert 'inf' in text
    assert '[2, 2, 3]' in text
