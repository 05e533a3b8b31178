"""
qslope
======

Colored Jones polynomials, Jones slopes and adequacy of knot diagrams.
"""

from qslope.enums import *
from qslope.exceptions import *
from qslope.project_info import *
from qslope.models.base import *
from qslope.models.polynomials import *
from qslope.models.diagrams import *
from qslope.models.states import *
from qslope.models.jones import *
from qslope.models.slopes import *
from qslope.models.catalog import *
from qslope.core.cache import *
from qslope.core.cache_impl import *
from qslope.core.config import *
from qslope.core.pd import *
from qslope.core.states import *
from qslope.core.bracket import *
from qslope.core.jones import *
from qslope.core.slopes import *
from qslope.core.catalog import *
from qslope.core.pipeline import *
from qslope.core.reports import *
