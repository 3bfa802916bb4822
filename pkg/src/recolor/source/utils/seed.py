import random

import numpy as np


def fix_seed(seed: int = 2024) -> None:
    random.seed(seed)
    np.random.seed(seed)
