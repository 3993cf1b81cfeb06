from .matrices import *
from .graph import *
from .clique import *
from .ovals import *
from .multipliers import *
