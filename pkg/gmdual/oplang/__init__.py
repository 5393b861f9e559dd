"""
Textual operator expressions: parsing, evaluation and printing.
"""

from gmdual.oplang.parser import OpExpr, parse, tokenize
from gmdual.oplang.evaluator import evaluate, parse_operator
from gmdual.oplang.printer import to_text, format_terms
