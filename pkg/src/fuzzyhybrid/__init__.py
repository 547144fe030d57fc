"""L-multi-fuzzy sets, L-fuzzy hybrid sets and general fuzzy P systems."""
from .frames import Degree, Frame, FrameError, FrameKind, FrameMismatchError
from .fuzzysets import CrispHybridSet, CrispMultiset, HybridSet, MultiFuzzySet
from .language import ParseError, parse, parse_degree, parse_file, serialize
from .psystem import (
    Configuration,
    HaltReport,
    Membrane,
    PSystem,
    Rule,
    Target,
    enumerate_step_outcomes,
    initial_configuration,
    run,
    step,
    validate,
)
from .zorder import ll

__version__ = "0.1.0"
