from .exception import *
from .utils import *
from .finite_field import *
from .geometry import *
from .core import *
from .search import *
from .constructions import *
from .covering import *
from .readwrite import *
from .catalog import *

# `from .constructions import *` re-exports the `constructions.pencil` submodule,
# shadowing the `pencil` function from geometry.conics; restore the function.
from .geometry.conics import pencil

__version__ = "0.1.0"
