"""Hand-transcribed graphs used across tests."""

from __future__ import annotations

from oitrd.graph import Graph, build_graph

# Four groups a, b, c, d of four vertices each and three hubs joining consecutive groups.
A, B, C, D = range(0, 4), range(4, 8), range(8, 12), range(12, 16)
HUB_AB, HUB_BC, HUB_CD = 16, 17, 18


def hub_chain() -> Graph:
    """19 vertices where the optimum OITRDF weight equals alpha + gamma_t (7 = 3 + 4)."""
    edges = []
    for i in range(4):
        edges += [
            (A[i], HUB_AB), (B[i], HUB_AB),
            (B[i], HUB_BC), (C[i], HUB_BC),
            (C[i], HUB_CD), (D[i], HUB_CD),
        ]
    return build_graph(19, edges)
