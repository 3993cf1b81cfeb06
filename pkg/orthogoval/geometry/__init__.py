from .plane import *
from .conics import *
from .spreads import *
