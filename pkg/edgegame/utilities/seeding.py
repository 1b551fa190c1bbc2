import numpy as np


def derive_seed(*keys):
    """Derives a 32-bit seed from a sequence of nonnegative integers. The same
    keys always produce the same seed, and distinct keys produce statistically
    independent streams, which lets experiments hand every run and every
    regeneration attempt its own generator.
    """
    state = np.random.SeedSequence([int(k) for k in keys]).generate_state(1)
    return int(state[0])
