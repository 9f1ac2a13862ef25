"""Line-record reader shared by the text formats"""

from collections.abc import Iterator
from dataclasses import dataclass

from .errors import FormatError


@dataclass(frozen=True)
class Record:
    """A non-blank, non-comment line split into whitespace tokens"""

    line: int
    tokens: tuple[str, ...]
    columns: tuple[int, ...]

    @property
    def tag(self) -> str:
        return self.tokens[0]

    def int_at(self, index: int, what: str) -> int:
        """Parse token ``index`` as an integer or fail with its position"""
        try:
            token = self.tokens[index]
        except IndexError:
            raise FormatError(f"missing {what}", self.line, self._end_column()) from None
        try:
            return int(token)
        except ValueError:
            raise FormatError(
                f"{what} must be an integer, got {token!r}",
                self.line,
                self.columns[index],
            ) from None

    def str_at(self, index: int, what: str) -> str:
        try:
            return self.tokens[index]
        except IndexError:
            raise FormatError(f"missing {what}", self.line, self._end_column()) from None

    def expect_arity(self, count: int) -> None:
        if len(self.tokens) > count:
            raise FormatError(
                f"unexpected token {self.tokens[count]!r}",
                self.line,
                self.columns[count],
            )

    def _end_column(self) -> int:
        return self.columns[-1] + len(self.tokens[-1]) + 1


def iter_records(text: str) -> Iterator[Record]:
    """Yield records, skipping blank lines and ``#`` comments"""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens: list[str] = []
        columns: list[int] = []
        position = 0
        for token in content.split():
            position = content.index(token, position)
            tokens.append(token)
            columns.append(position + 1)
            position += len(token)
        if tokens:
            yield Record(line_no, tuple(tokens), tuple(columns))


def iter_comments(text: str) -> Iterator[tuple[int, list[str]]]:
    """Yield ``(line, tokens)`` for every ``#`` comment line"""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            yield line_no, stripped[1:].split()
