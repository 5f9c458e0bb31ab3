"""Configuration package for the RACG boundary toolkit."""

from src.config.settings import *
from src.config.strategies import *
