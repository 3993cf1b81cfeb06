from .orthogovality import *
from .bounds import *
from .designs import *
from .isomorphism import *
