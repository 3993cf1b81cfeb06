from .field import *
from .polynomials import *
from .extension import *
