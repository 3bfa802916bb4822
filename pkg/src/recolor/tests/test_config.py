import json
import random
from pathlib import Path

import numpy as np
import pytest

from source.utils.config import BUDGET_ENV, get_config
from source.utils.seed import fix_seed
from src.utils import load_settings

DEFAULT_CONFIG = (Path(__file__).parents[1] / 'config' / 'default.yaml').as_posix()


@pytest.fixture(autouse=True)
def no_budget_env(monkeypatch):
    monkeypatch.delenv(BUDGET_ENV, raising=False)


def test_defaults():
    config = get_config(DEFAULT_CONFIG, [])
    assert config['budget'] == 1000000
    assert config['output'] == 'text'
    assert config['sweep']['cycle']['ells'] == [4, 5]


def test_budget_precedence(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, '50')
    assert get_config(DEFAULT_CONFIG, [])['budget'] == 50
    assert get_config(DEFAULT_CONFIG, ['budget=70'])['budget'] == 70
    assert get_config(DEFAULT_CONFIG, ['budget=70'], budget=90)['budget'] == 90


def test_dot_list_reaches_nested_keys():
    config = get_config(DEFAULT_CONFIG, ['sweep.cycle.n_max=6', 'mixing.with_diameter=true'])
    assert config['sweep']['cycle']['n_max'] == 6
    assert config['mixing']['with_diameter'] is True


def test_fix_seed_is_reproducible():
    fix_seed(7)
    first = (random.random(), np.random.rand())
    fix_seed(7)
    assert (random.random(), np.random.rand()) == first


def test_load_settings(tmp_path):
    path = tmp_path / 'SETTINGS.json'
    path.write_text(json.dumps({'REPORT_DIR': './out/', 'GRAPH_DIR': './in/'}))
    settings = load_settings(path.as_posix())
    assert settings.report_dir == Path('out')
    assert settings.graph_dir == Path('in')
