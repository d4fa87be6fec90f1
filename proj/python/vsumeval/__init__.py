"""Reference-based video-summarization evaluation (C++ core)."""

import json as _json

from . import _core
from ._core import *  # noqa: F401,F403

__version__ = _core.__version__


def randomization_test(bundle, **kwargs):
    """run_randomization_test with the JSON report decoded."""
    return _json.loads(_core.run_randomization_test(bundle, **kwargs))


def rank_eval(bundle, **kwargs):
    """run_rank_eval with the JSON report decoded."""
    return _json.loads(_core.run_rank_eval(bundle, **kwargs))
