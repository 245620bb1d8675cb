"""Minor models, their verification, and the two embedding engines."""
import math

from ..errors import InputError
from .complete import complete_branch_size, complete_target, embed_complete
from .cover import CoverConnector, cover_size_bound, efficient_cover
from .model import MinorModel, Verdict, contract_model, verify_minor
from .state import PartitionState, audit_partition, p1_bound
from .universal import bfs_order, embed_universal, empirical_capacity, universality_capacity


def diameter_bound(n: float, alpha: float, t: float) -> float:
    """Diameter limit ``3 ln n / (alpha ln t)`` for connected (alpha, t)-expanders."""
    if t < 2:
        raise InputError("need t >= 2")
    return 3 * math.log(n) / (alpha * math.log(t))


__all__ = [
    "CoverConnector", "MinorModel", "PartitionState", "Verdict", "audit_partition", "bfs_order",
    "complete_branch_size", "complete_target", "contract_model", "cover_size_bound", "diameter_bound",
    "efficient_cover", "embed_complete", "embed_universal", "empirical_capacity", "p1_bound",
    "universality_capacity", "verify_minor",
]
