"""Small shared helpers for the test modules."""
from flowgraphs.validator import parse_assertions


def txt_edges(pairs):
    return {(a.txt, b.txt) for a, b in pairs}


def asserted_edges(text, command):
    return {(a.source, a.target) for a in parse_assertions(text) if a.command == command}


def method_src(body, params="int a", ret="int", name="f"):
    return f"class C {{ {ret} {name}({params}) {{ {body} }} }}"
