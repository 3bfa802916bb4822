from typing import Optional

import os

from omegaconf import OmegaConf


BUDGET_ENV = 'RECOLOR_BUDGET'


def get_config(config_path: str, dot_list: list, budget: Optional[int] = None) -> dict:
    '''
    YAML defaults, then RECOLOR_BUDGET, then the --options dot list, then an
    explicit --budget flag; later entries win.
    '''
    config_omega_from_yaml = OmegaConf.load(config_path)
    layers = [config_omega_from_yaml]
    if os.environ.get(BUDGET_ENV):
        layers.append(OmegaConf.create({'budget': int(os.environ[BUDGET_ENV])}))
    layers.append(OmegaConf.from_dotlist(dot_list))
    if budget is not None:
        layers.append(OmegaConf.create({'budget': budget}))
    config_omega = OmegaConf.merge(*layers)
    config = OmegaConf.to_container(config_omega, resolve=True)  # DictConfig -> dict
    return config
