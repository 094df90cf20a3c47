"""Crystal models for affine sl_n built from abaci, cylindric plane partitions
and Kyoto paths, plus the type A crystal commutor."""

from .abacus import AbacusConfig, AbacusCrystal, compact_for_weight
from .charformula import QSeries, Z_borodin, Z_weyl, dimq_V
from .cpp import CylindricPartition
from .crystal import CrystalGraph, check_local_axioms, explore
from .kyoto import Path, ground_state_path
from .partitions import BeadRow

__version__ = "0.1.0"

__all__ = [
    "AbacusConfig",
    "AbacusCrystal",
    "BeadRow",
    "CrystalGraph",
    "CylindricPartition",
    "Path",
    "QSeries",
    "Z_borodin",
    "Z_weyl",
    "check_local_axioms",
    "compact_for_weight",
    "dimq_V",
    "explore",
    "ground_state_path",
]
