from .abstract_matrix_game_solver import AbstractMatrixGameSolver
from .simplex_solver import SimplexSolver
