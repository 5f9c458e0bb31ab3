"""Utils package."""

from src.utils.helpers import *
from src.utils.errors import *
