# SPDX-License-Identifier: Apache-2.0
"""Inter-cell reciprocity error estimation for coherent joint transmission."""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
