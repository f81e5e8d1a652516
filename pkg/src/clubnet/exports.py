"""DOT and GraphML export of a single club's induced subgraph.

Central nodes and central-pair edges are flagged via attributes so an
external renderer can emphasise them; node labels carry name and country.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .graph import Graph
from .store import ClubRecord


def _label(g: Graph, node: str) -> str:
    a = g.attrs(node)
    bits = [node]
    if a.name:
        bits.append(a.name)
    if a.country:
        bits.append(a.country)
    return "\\n".join(bits)


def to_dot(g: Graph, record: ClubRecord) -> str:
    sub = g.induced(record.nodes)
    centers = set(record.central_nodes)
    pair_edges = {tuple(sorted(p)) for p in record.central_pairs}
    lines = [f'graph club_{record.club_id} {{']
    for v in sorted(record.nodes):
        attrs = [f'label="{_label(g, v)}"']
        if v in centers:
            attrs.append("central=true")
            attrs.append("shape=doublecircle")
        lines.append(f'  "{v}" [{", ".join(attrs)}];')
    for u, v in sub.edges():
        attrs = []
        if (u, v) in pair_edges:
            attrs = [' [central_pair=true, penwidth=2]']
        lines.append(f'  "{u}" -- "{v}"{"".join(attrs)};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_graphml(g: Graph, record: ClubRecord) -> str:
    sub = g.induced(record.nodes)
    ns = "http://graphml.graphdrawing.org/xmlns"
    ET.register_namespace("", ns)
    root = ET.Element(f"{{{ns}}}graphml")
    for key_id, target, name in (("d_name", "node", "name"),
                                 ("d_country", "node", "country"),
                                 ("d_central", "node", "central"),
                                 ("d_pair", "edge", "central_pair")):
        key = ET.SubElement(root, f"{{{ns}}}key")
        key.set("id", key_id)
        key.set("for", target)
        key.set("attr.name", name)
        key.set("attr.type", "string")
    graph = ET.SubElement(root, f"{{{ns}}}graph")
    graph.set("id", f"club_{record.club_id}")
    graph.set("edgedefault", "undirected")
    centers = set(record.central_nodes)
    for v in sorted(record.nodes):
        node = ET.SubElement(graph, f"{{{ns}}}node")
        node.set("id", v)
        a = g.attrs(v)
        for key_id, value in (("d_name", a.name), ("d_country", a.country)):
            data = ET.SubElement(node, f"{{{ns}}}data")
            data.set("key", key_id)
            data.text = value
        if v in centers:
            data = ET.SubElement(node, f"{{{ns}}}data")
            data.set("key", "d_central")
            data.text = "true"
    pair_edges = {tuple(sorted(p)) for p in record.central_pairs}
    for u, v in sub.edges():
        edge = ET.SubElement(graph, f"{{{ns}}}edge")
        edge.set("source", u)
        edge.set("target", v)
        if (u, v) in pair_edges:
            data = ET.SubElement(edge, f"{{{ns}}}data")
            data.set("key", "d_pair")
            data.text = "true"
    ET.indent(root)
    return ET.tostring(root, encoding="unicode", xml_declaration=True) + "\n"
