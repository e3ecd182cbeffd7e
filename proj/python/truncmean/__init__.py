"""Mean of a one-sided truncated multivariate normal distribution.

Deterministic coordinate-wise fixed-point solver with a Gibbs-sampling
baseline and low-dimensional validation oracles; the heavy lifting lives in
the compiled ``_truncmean`` extension.
"""

try:
    from ._truncmean import *  # noqa: F401,F403  (installed wheel layout)
    from ._truncmean import __version__  # noqa: F401
except ImportError:  # in-tree builds put the extension on PYTHONPATH directly
    from _truncmean import *  # noqa: F401,F403
    from _truncmean import __version__  # noqa: F401
