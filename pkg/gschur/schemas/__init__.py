from gschur.schemas.algebra import *
from gschur.schemas.reports import *
