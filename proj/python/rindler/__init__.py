"""Two-qubit quantum correlations under uniformly accelerated observers.

Thin python surface over the C++ core: state constructors, the Unruh channel,
correlation measures (logarithmic negativity, entanglement of formation,
quantum discord in both measurement directions), and the threshold /
verification helpers.
"""

try:
    from ._rindler import *  # noqa: F401,F403  (installed package layout)
    from ._rindler import __version__  # noqa: F401
except ImportError:
    from _rindler import *  # noqa: F401,F403  (build-tree layout)
    from _rindler import __version__  # noqa: F401
