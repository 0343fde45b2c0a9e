from .analysis import (
    PROFILE_COLUMNS,
    MonotonicityReport,
    monogamy_report,
    monotonicity_report,
    opposing_segment,
    trajectory_profiles,
)
from .contour import LevelNotAttained, Trajectory, TrajectoryPoint, contour_trajectory, level_curve
from .demos import NonconverseReport, nonconverse_demo
from .fuzz import FuzzReport, gaussian_fuzz, identity_suite, qubit_fuzz, random_separable_rank2
from .scan import SCAN_COLUMNS, ScanGrid, grid_scan
