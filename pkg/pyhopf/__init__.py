"""pyHopf: exact computations with finite group schemes given as Hopf algebras, their actions on fields and
rings, and prolongations of affine varieties."""

import logging

from . import config
from . import errors
from . import fields
from . import poly
from . import hopf
from . import gsa
from . import prolong
from .report import Report, Violation

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


@config.register_post_config_hook
def _post_config():
    logger.setLevel(config.get("logging.level"))


_post_config()
