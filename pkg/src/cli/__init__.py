"""Command-line front end, file formats and report emitters."""

from .linkfile import parse_link_file, parse_matrix_file, parse_word, serialize_link_file
from .main import build_parser, run
from .reports import render

__all__ = [
    "parse_link_file",
    "parse_matrix_file",
    "parse_word",
    "serialize_link_file",
    "build_parser",
    "run",
    "render",
]
