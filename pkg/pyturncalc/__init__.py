from .types import *
from .su2 import *
from .turns import *
from .poincare import *
from .pancharatnam import *
from .optics import *
from .persistence import *
from .synthesis import *
from .diagram import *
