from .probability import check_distribution, clip_probability
from .seeding import derive_seed
