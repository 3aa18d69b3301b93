from radbound.maxflow.network import (
    FlowNetwork,
    FlowResult,
    cut_capacity,
    max_flow,
    verify_certificate,
)

__all__ = [
    "FlowNetwork",
    "FlowResult",
    "max_flow",
    "cut_capacity",
    "verify_certificate",
]
