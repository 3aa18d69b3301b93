import logging
import math
from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass

from radbound.core.constants import CAPACITY_EPSILON, CERTIFICATE_TOLERANCE
from radbound.errors.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True)
class FlowResult:
    """Maximum flow value and the minimal source side of a minimum cut"""

    flow_value: float
    source_side: tuple[bool, ...]


class FlowNetwork:
    """
    Sparse directed network with two terminals.

    Inner nodes are 0..node_count-1; the source and sink are the extra
    indices `source` and `sink`. Arcs are stored in pairs (2a, 2a+1) where
    the odd arc is the residual partner of the even one.
    """

    def __init__(self, node_count: int):
        if node_count < 0:
            raise InvalidParameterError("node_count must be >= 0")
        self.node_count = node_count
        self.source = node_count
        self.sink = node_count + 1
        self._heads: list[int] = []
        self._capacities: list[float] = []
        self._adjacency: list[list[int]] = [[] for _ in range(node_count + 2)]

    @property
    def total_nodes(self) -> int:
        return self.node_count + 2

    def add_arc(
        self,
        tail: int,
        head: int,
        capacity: float,
        reverse_capacity: float = 0.0,
    ) -> int:
        """Add tail->head with its paired head->tail arc; returns the arc id"""
        for node in (tail, head):
            if not 0 <= node < self.total_nodes:
                raise InvalidParameterError(f"Unknown node {node}")
        if tail == head:
            raise InvalidParameterError(f"Self-loop on node {tail}")
        for value in (capacity, reverse_capacity):
            if not math.isfinite(value) or value < 0:
                raise InvalidParameterError(
                    f"Capacities must be finite and >= 0, got {value}"
                )
        arc = len(self._heads)
        self._heads.extend((head, tail))
        self._capacities.extend((float(capacity), float(reverse_capacity)))
        self._adjacency[tail].append(arc)
        self._adjacency[head].append(arc + 1)
        return arc

    def add_terminal_arcs(
        self, node: int, source_capacity: float, sink_capacity: float
    ) -> None:
        """Connect an inner node to both terminals, skipping zero arcs"""
        if source_capacity > 0:
            self.add_arc(self.source, node, source_capacity)
        if sink_capacity > 0:
            self.add_arc(node, self.sink, sink_capacity)

    def arcs(self) -> Iterator[tuple[int, int, float]]:
        """All arcs with positive capacity as (tail, head, capacity)"""
        for arc, head in enumerate(self._heads):
            capacity = self._capacities[arc]
            if capacity > 0:
                yield self._heads[arc ^ 1], head, capacity


def _reachable(
    network: FlowNetwork, residual: list[float], parent: list[int] | None = None
) -> list[bool]:
    heads = network._heads
    adjacency = network._adjacency
    visited = [False] * network.total_nodes
    visited[network.source] = True
    queue = deque([network.source])
    while queue:
        node = queue.popleft()
        for arc in adjacency[node]:
            head = heads[arc]
            if not visited[head] and residual[arc] > CAPACITY_EPSILON:
                visited[head] = True
                if parent is not None:
                    parent[head] = arc
                    if head == network.sink:
                        return visited
                queue.append(head)
    return visited


def max_flow(network: FlowNetwork) -> FlowResult:
    """
    Shortest augmenting paths (breadth-first) until the sink is cut off.

    The network itself is not modified. Arc order fixes the traversal, so
    identical inputs give identical labelings.
    """
    residual = list(network._capacities)
    heads = network._heads
    flow = 0.0
    augmentations = 0
    parent = [-1] * network.total_nodes

    while True:
        visited = _reachable(network, residual, parent)
        if not visited[network.sink]:
            break
        bottleneck = math.inf
        node = network.sink
        while node != network.source:
            arc = parent[node]
            bottleneck = min(bottleneck, residual[arc])
            node = heads[arc ^ 1]
        node = network.sink
        while node != network.source:
            arc = parent[node]
            residual[arc] -= bottleneck
            residual[arc ^ 1] += bottleneck
            node = heads[arc ^ 1]
        flow += bottleneck
        augmentations += 1

    logger.debug("max_flow: %d augmentations, value %.12g", augmentations, flow)
    source_side = tuple(visited[: network.node_count])
    return FlowResult(flow_value=flow, source_side=source_side)


def cut_capacity(network: FlowNetwork, source_side: tuple[bool, ...]) -> float:
    """Capacity of arcs leaving the source side of a cut"""
    if len(source_side) != network.node_count:
        raise InvalidParameterError("Cut labeling must cover every inner node")
    side = list(source_side) + [True, False]
    return math.fsum(
        capacity
        for tail, head, capacity in network.arcs()
        if side[tail] and not side[head]
    )


def verify_certificate(
    network: FlowNetwork,
    result: FlowResult,
    tolerance: float = CERTIFICATE_TOLERANCE,
) -> bool:
    """Max-flow min-cut identity: flow value equals the returned cut capacity"""
    return abs(result.flow_value - cut_capacity(network, result.source_side)) <= (
        tolerance
    )
