"""Zero-circle-means toolkit on annuli.

Test whether a function on a closed ring has vanishing averages over every
circle surrounding the hole, split such functions into halves with one-sided
holomorphic extension properties per circle, and evaluate the associated
extension functions on the two domains attached to the lifted annulus.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
