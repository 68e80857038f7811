"""The two-color palette shared by every module."""

from __future__ import annotations

from enum import Enum


class Color(Enum):
    RED = "red"
    BLUE = "blue"

    def opposite(self) -> Color:
        return Color.BLUE if self is Color.RED else Color.RED

    def __str__(self) -> str:
        return self.value


def parse_color(token: str) -> Color:
    try:
        return Color(token.lower())
    except ValueError:
        raise ValueError(f"unknown color {token!r} (expected red or blue)") from None
