"""Java-subset frontend: parser, JSON AST codec, static checks and printer."""
from . import ast
from .json_ast import dump_ast_json, load_ast_json
from .parser import parse_expression, parse_java, parse_method
from .printer import expression_text, unit_source

__all__ = [
    "ast", "dump_ast_json", "expression_text", "load_ast_json",
    "parse_expression", "parse_java", "parse_method", "unit_source",
]
