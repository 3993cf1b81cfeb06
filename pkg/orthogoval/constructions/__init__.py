from .cremona import *
from .pencil import *
from .phi_k import *
from .difference_set import *
from .steiner import *
from .matrix_power import *
