"""
Graphviz DOT export.

Incidence hypergraphs are drawn as bipartite incidence graphs: filled
vertex nodes, hollow edge nodes, one plain line per incidence. Quivers are
digraphs. Set-system hypergraphs draw each edge as a hollow node joined
to its endpoints. Node ids are positional (n0, n1, ...) in canonical label
order, with element labels as node labels, so output is deterministic.
"""

import logging
from pathlib import Path
from typing import Dict, Optional, Union

import graphviz
from graphviz import nohtml

from .core import (
    EDGE,
    SORT_PLURAL,
    VERTEX,
    GraphObject,
    IncidenceHypergraph,
    Quiver,
    SetSystemHypergraph,
)
from .elements import label

logger = logging.getLogger(__name__)

VERTEX_NODE = {"shape": "circle", "style": "filled", "fillcolor": "black", "fontcolor": "white"}
EDGE_NODE = {"shape": "circle", "style": "solid", "fillcolor": "white"}


def _add_nodes(dot: graphviz.Graph, obj: GraphObject, sort: str, attrs: Dict[str, str], ids: Dict) -> None:
    with dot.subgraph(name=SORT_PLURAL[sort]) as group:
        group.attr(rank="same")
        for x in obj.ordered(sort):
            node = f"n{len(ids)}"
            ids[(sort, x)] = node
            group.node(node, label=nohtml(label(x)), **attrs)


def incidence_dot(g: IncidenceHypergraph, name: str = "G") -> graphviz.Graph:
    dot = graphviz.Graph(name=name)
    dot.attr(rankdir="LR")
    ids: Dict = {}
    _add_nodes(dot, g, VERTEX, VERTEX_NODE, ids)
    _add_nodes(dot, g, EDGE, EDGE_NODE, ids)
    for i in g.ordered("incidence"):
        dot.edge(ids[(VERTEX, g.port[i])], ids[(EDGE, g.attachment[i])], tooltip=nohtml(label(i)))
    return dot


def quiver_dot(q: Quiver, name: str = "Q") -> graphviz.Digraph:
    dot = graphviz.Digraph(name=name)
    ids: Dict = {}
    for v in q.ordered(VERTEX):
        node = f"n{len(ids)}"
        ids[v] = node
        dot.node(node, label=nohtml(label(v)), **VERTEX_NODE)
    for e in q.ordered(EDGE):
        dot.edge(ids[q.source[e]], ids[q.target[e]], label=nohtml(label(e)))
    return dot


def hypergraph_dot(h: SetSystemHypergraph, name: str = "H") -> graphviz.Graph:
    dot = graphviz.Graph(name=name)
    ids: Dict = {}
    _add_nodes(dot, h, VERTEX, VERTEX_NODE, ids)
    _add_nodes(dot, h, EDGE, EDGE_NODE, ids)
    for e in h.ordered(EDGE):
        for v in sorted(h.endpoints[e], key=label):
            dot.edge(ids[(VERTEX, v)], ids[(EDGE, e)])
    return dot


def to_graph(obj: GraphObject, name: Optional[str] = None) -> Union[graphviz.Graph, graphviz.Digraph]:
    """graphviz object for any of the three object kinds."""
    if isinstance(obj, IncidenceHypergraph):
        return incidence_dot(obj, name or "G")
    if isinstance(obj, Quiver):
        return quiver_dot(obj, name or "Q")
    return hypergraph_dot(obj, name or "H")


def to_dot(obj: GraphObject, name: Optional[str] = None) -> str:
    """DOT source text."""
    source = to_graph(obj, name).source
    logger.debug(f"Exported {obj.category} ({obj.describe()}) to DOT")
    return source


def write_dot(obj: GraphObject, path: Union[str, Path], name: Optional[str] = None) -> Path:
    path = Path(path)
    path.write_text(to_dot(obj, name), encoding="utf-8")
    return path
