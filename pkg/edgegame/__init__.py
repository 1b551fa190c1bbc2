import logging

from .version import __version__

# Library use is silent unless the application configures logging.
logging.getLogger(__name__).addHandler(logging.NullHandler())
