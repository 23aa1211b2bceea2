"""Configuration map, inscribed-triangle search, continuation and degree counting."""

from triangle_inscriber.solver.continuation import continue_solution
from triangle_inscriber.solver.counterexample import counterexample_sweep, leftward_isosceles
from triangle_inscriber.solver.degree import BidegreeReport, LocalDegree, bidegree, local_degree
from triangle_inscriber.solver.search import (
    Solution,
    SolveReport,
    circle_oracle,
    refine,
    solve,
    solve_labelings,
)
from triangle_inscriber.solver.triangle_map import (
    BoundaryDatum,
    CriticalityReport,
    ParamTriple,
    boundary_shape,
    is_critical,
    shape_jacobian,
    shape_map,
    tangent_map,
)

__all__ = [
    "BidegreeReport",
    "BoundaryDatum",
    "CriticalityReport",
    "LocalDegree",
    "ParamTriple",
    "Solution",
    "SolveReport",
    "bidegree",
    "boundary_shape",
    "circle_oracle",
    "continue_solution",
    "counterexample_sweep",
    "is_critical",
    "leftward_isosceles",
    "local_degree",
    "refine",
    "shape_jacobian",
    "shape_map",
    "solve",
    "solve_labelings",
    "tangent_map",
]
