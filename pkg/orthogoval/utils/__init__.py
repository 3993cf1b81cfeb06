from .chunk import *
from .cover import *
