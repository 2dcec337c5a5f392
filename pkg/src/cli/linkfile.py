"""
Link files (.mlnk) and matrix files.

A link file declares the component count, optionally the degree through
which the longitude words are certified, and one longitude per component:

    # Borromean rings
    components 3
    valid_to 3
    longitude 1 = [m2, m3]
    longitude 2 = [m3, m1]
    longitude 3 = [m2, m1]

Words are products of m<j>, m<j>^-1, nested commutators [u, v] and the
identity e. A matrix file holds whitespace-separated integer rows.
"""

import re
from typing import Dict, List, Optional, Tuple

from ..errors import LinkFileError
from ..linkforms.matrices import SymIntMatrix
from ..links.models import LongitudeLink
from ..magnus.words import FreeWord, commutator

_TOKEN = re.compile(r"m(\d+)(\^-1)?|e(?![\w^])|\[|\]|,")
_HEADER = re.compile(r"(components|valid_to)\s+(\S+)\s*$")
_LONGITUDE = re.compile(r"longitude\s+(\S+)\s*=\s*")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


class _WordParser:
    """Recursive-descent parser for one word; columns are 1-based."""

    def __init__(self, text: str, rank: int, line: int, start: int):
        self.rank = rank
        self.line = line
        self.tokens: List[Tuple[str, int, re.Match]] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            match = _TOKEN.match(text, pos)
            if match is None:
                bad = re.match(r"\S+", text[pos:]).group(0)
                raise LinkFileError(f"unknown token '{bad}'", line, start + pos + 1)
            self.tokens.append((match.group(0), start + pos + 1, match))
            pos = match.end()
        self.index = 0

    def _peek(self) -> Optional[str]:
        return self.tokens[self.index][0] if self.index < len(self.tokens) else None

    def _column(self) -> int:
        if self.index < len(self.tokens):
            return self.tokens[self.index][1]
        return self.tokens[-1][1] + len(self.tokens[-1][0]) if self.tokens else 1

    def _expect(self, token: str) -> None:
        if self._peek() != token:
            found = self._peek() or "end of line"
            raise LinkFileError(f"expected '{token}', found '{found}'", self.line, self._column())
        self.index += 1

    def parse(self) -> FreeWord:
        word = self._word()
        if self._peek() is not None:
            raise LinkFileError(f"unexpected '{self._peek()}'", self.line, self._column())
        return word

    def _word(self) -> FreeWord:
        word = FreeWord.identity(self.rank)
        factors = 0
        while self._peek() not in (None, "]", ","):
            word = word * self._factor()
            factors += 1
        if factors == 0:
            raise LinkFileError("empty word (write 'e' for the identity)", self.line, self._column())
        return word

    def _factor(self) -> FreeWord:
        token, column, match = self.tokens[self.index]
        if token == "e":
            self.index += 1
            return FreeWord.identity(self.rank)
        if token == "[":
            self.index += 1
            left = self._word()
            self._expect(",")
            right = self._word()
            self._expect("]")
            return commutator(left, right)
        if match.group(1) is not None:
            gen = int(match.group(1))
            if not 1 <= gen <= self.rank:
                raise LinkFileError(
                    f"generator m{gen} out of range 1..{self.rank}", self.line, column
                )
            self.index += 1
            return FreeWord.generator(self.rank, gen, -1 if match.group(2) else 1)
        raise LinkFileError(f"unexpected '{token}'", self.line, column)


def parse_word(text: str, rank: int, line: int = 1, start: int = 0) -> FreeWord:
    return _WordParser(text, rank, line, start).parse()


def parse_link_file(text: str) -> LongitudeLink:
    """
    Parse a link file.

    Raises:
        LinkFileError: With the line and column of the first problem.
    """
    components: Optional[int] = None
    valid_to: Optional[int] = None
    words: Dict[int, FreeWord] = {}
    last_line = 0

    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        last_line = number
        indent = len(line) - len(line.lstrip())
        body = line.strip()

        header = _HEADER.match(body)
        if header:
            key, value = header.groups()
            column = indent + body.index(value) + 1
            if not value.isdigit() or int(value) < 1:
                raise LinkFileError(f"{key} must be a positive integer, got '{value}'", number, column)
            if key == "components":
                if components is not None:
                    raise LinkFileError("duplicate 'components' header", number, indent + 1)
                components = int(value)
            else:
                if valid_to is not None:
                    raise LinkFileError("duplicate 'valid_to' header", number, indent + 1)
                valid_to = int(value)
            continue

        decl = _LONGITUDE.match(body)
        if decl:
            if components is None:
                raise LinkFileError("'components' must come before longitudes", number, indent + 1)
            label = decl.group(1)
            column = indent + decl.start(1) + 1
            if not label.isdigit() or not 1 <= int(label) <= components:
                raise LinkFileError(
                    f"longitude index '{label}' out of range 1..{components}", number, column
                )
            i = int(label)
            if i in words:
                raise LinkFileError(f"duplicate longitude {i}", number, column)
            words[i] = parse_word(body[decl.end():], components, number, indent + decl.end())
            continue

        keyword = body.split()[0]
        raise LinkFileError(f"unknown token '{keyword}'", number, indent + 1)

    if components is None:
        raise LinkFileError("missing 'components' header", last_line + 1, 1)
    for i in range(1, components + 1):
        if i not in words:
            raise LinkFileError(f"missing longitude {i}", last_line + 1, 1)
    return LongitudeLink(tuple(words[i] for i in range(1, components + 1)), valid_to=valid_to)


def serialize_link_file(link: LongitudeLink) -> str:
    lines = [f"components {link.components}"]
    if link.valid_to is not None:
        lines.append(f"valid_to {link.valid_to}")
    for i, word in enumerate(link.longitudes, start=1):
        lines.append(f"longitude {i} = {word}")
    return "\n".join(lines) + "\n"


def parse_matrix_file(text: str) -> SymIntMatrix:
    """Whitespace-separated integer rows; '#' starts a comment."""
    rows: List[Tuple[int, ...]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        row = []
        for match in re.finditer(r"\S+", line):
            try:
                row.append(int(match.group(0)))
            except ValueError:
                raise LinkFileError(
                    f"not an integer: '{match.group(0)}'", number, match.start() + 1
                ) from None
        if rows and len(row) != len(rows[0]):
            raise LinkFileError(
                f"row has {len(row)} entries, expected {len(rows[0])}", number, 1
            )
        rows.append(tuple(row))
    return SymIntMatrix(tuple(rows))
