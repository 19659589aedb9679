"""Sprague-Grundy values, misère outcomes and winning moves for Mark-t."""

from .grundy import easy_classify, flip, grundy, grundy_t2, hard, strip_extra_t_minus_1
from .misere import is_power_of_t, misere_outcome, misere_winning_move
from .oracle import N, P, OracleSession, mex
from .sums import Move, sum_grundy, sum_outcome, winning_move
from .tary import TaryNat, div_t, format_position, options, parse_position, sub_small, trailing_run

__version__ = "0.1.0"
