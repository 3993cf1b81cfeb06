from .cphf import *
from .array import *
