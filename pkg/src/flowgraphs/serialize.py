"""XML and DOT serialization of flow graphs.

XML layout::

    <flowgraphs>
      <graph class="C" method="f">
        <var name="a" origin="param"/>
        <instr id="0" kind="method" txt="f()">
          <def var="a"/>
          <cfNext ref="2"/>
          <dfNext ref="2"/>
        </instr>
        ...
      </graph>
    </flowgraphs>

``cf_prev`` is not written; it is rebuilt from ``cfNext`` on load.
"""
from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import List

from .errors import FlowgraphsError
from .model import FlowGraph, FlowInstr, VarDef, iter_graphs, link_cf, link_df


class ModelFormatError(FlowgraphsError):
    pass


def serialize_xml(graphs) -> str:
    root = ET.Element("flowgraphs")
    for graph in iter_graphs(graphs):
        attrs = {"class": graph.class_name} if graph.class_name else {}
        attrs["method"] = graph.name
        g = ET.SubElement(root, "graph", attrs)
        for var in graph.vars:
            ET.SubElement(g, "var", {"name": var.name, "origin": var.origin})
        for instr in graph.instrs:
            node = ET.SubElement(g, "instr", {"id": str(instr.id), "kind": instr.kind, "txt": instr.txt})
            for var in instr.defs:
                ET.SubElement(node, "def", {"var": var.name})
            for var in instr.uses:
                ET.SubElement(node, "use", {"var": var.name})
            for target in instr._cf_next:
                ET.SubElement(node, "cfNext", {"ref": str(target.id)})
            for target in instr._df_next:
                ET.SubElement(node, "dfNext", {"ref": str(target.id)})
    ET.indent(root, space="  ")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def _attr(el, name):
    value = el.get(name)
    if value is None:
        raise ModelFormatError(f"<{el.tag}> lacks attribute {name!r}")
    return value


def _int_attr(el, name):
    value = _attr(el, name)
    try:
        return int(value)
    except ValueError:
        raise ModelFormatError(f"<{el.tag}> attribute {name!r} is not an integer: {value!r}") from None


def deserialize_xml(text: str) -> List[FlowGraph]:
    """Rebuild graphs from :func:`serialize_xml` output, preserving instruction ids."""
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise ModelFormatError(f"malformed XML: {exc}") from exc
    if root.tag != "flowgraphs":
        raise ModelFormatError(f"unexpected root element <{root.tag}>")
    graphs = []
    for g in root.findall("graph"):
        graph = FlowGraph(_attr(g, "method"), g.get("class"))
        variables = {}
        for v in g.findall("var"):
            try:
                var = VarDef(_attr(v, "name"), v.get("origin", "local"))
            except ValueError as exc:
                raise ModelFormatError(str(exc)) from None
            variables[var.name] = var
            graph.vars.append(var)

        def lookup(name):
            if name not in variables:
                raise ModelFormatError(f"undeclared variable {name!r} in graph {graph.name}")
            return variables[name]

        elements = g.findall("instr")
        by_id = {}
        for el in elements:
            kind = _attr(el, "kind")
            ident = _int_attr(el, "id")
            if kind == "method":
                instr = graph.method
            elif kind == "exit":
                instr = graph.exit
            else:
                try:
                    instr = FlowInstr(kind)
                except ValueError as exc:
                    raise ModelFormatError(str(exc)) from None
                graph.body.append(instr)
                instr.graph = graph
            instr.id = ident
            instr.txt = _attr(el, "txt")
            instr.defs = [lookup(d.get("var")) for d in el.findall("def")]
            instr.uses = [lookup(u.get("var")) for u in el.findall("use")]
            if ident in by_id:
                raise ModelFormatError(f"duplicate instruction id {ident}")
            by_id[ident] = instr
        graph._next_id = max(by_id, default=-1) + 1
        for el in elements:
            source = by_id[int(el.get("id"))]
            for tag, link in (("cfNext", link_cf), ("dfNext", link_df)):
                for ref in el.findall(tag):
                    target = by_id.get(_int_attr(ref, "ref"))
                    if target is None:
                        raise ModelFormatError(f"dangling {tag} reference {ref.get('ref')}")
                    link(source, target)
        graphs.append(graph)
    return graphs


# -- DOT -------------------------------------------------------------------


def dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def _shared_vars(a: FlowInstr, b: FlowInstr) -> List[str]:
    used = {id(v) for v in b.uses}
    return [v.name for v in a.defs if id(v) in used]


def serialize_dot(graph: FlowGraph, edge_set: str = "cf") -> str:
    """Render one graph as a DOT digraph.

    Control-flow edges are solid (branch edges labelled ``T``/``F``), data-flow
    edges dashed and labelled with the variable they carry.
    """
    if edge_set not in ("cf", "df", "both"):
        raise ValueError(f"edge_set must be cf, df or both, not {edge_set!r}")
    lines = [f'digraph "{dot_escape(graph.qualified_name)}" {{', "  node [shape=box];"]
    for instr in graph.instrs:
        shape = ", shape=ellipse" if instr.kind in ("method", "exit") else ""
        shape = ", shape=diamond" if instr.kind == "expr" else shape
        lines.append(f'  n{instr.id} [label="{dot_escape(instr.txt)}"{shape}];')
    if edge_set in ("cf", "both"):
        for a in graph.instrs:
            targets = a.cf_next
            for index, b in enumerate(targets):
                attrs = ""
                if a.kind == "expr" and len(targets) == 2:
                    attrs = ' [label="T"]' if index == 0 else ' [label="F"]'
                lines.append(f"  n{a.id} -> n{b.id}{attrs};")
    if edge_set in ("df", "both"):
        for a in graph.instrs:
            for b in a._df_next:
                label = dot_escape(", ".join(_shared_vars(a, b)))
                lines.append(f'  n{a.id} -> n{b.id} [style=dashed, label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def serialize_dot_all(graphs, edge_set: str = "cf") -> str:
    return "".join(serialize_dot(g, edge_set) for g in iter_graphs(graphs))
