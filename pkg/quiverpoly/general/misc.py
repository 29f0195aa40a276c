"""Various utility functions."""

import collections.abc
import typing as t


def dict_mirror(dict_: dict):
    return {value: key for key, value in dict_.items() if value is not None}


def parse_int_sequence(text: str, separator: str = ',') -> t.Tuple[int, ...]:
    """Parse text like "2,3,2" into a tuple of integers."""
    assert isinstance(text, str), type(text)
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(separator))


def trim_trailing(sequence: t.Sequence[int], value: int = 0) -> t.Tuple[int, ...]:
    """Drop all trailing occurrences of value."""
    assert isinstance(sequence, collections.abc.Sequence), type(sequence)
    end = len(sequence)
    while end > 0 and sequence[end - 1] == value:
        end -= 1
    return tuple(sequence[:end])


def add_vectors(first: t.Sequence[int], second: t.Sequence[int], factor: int = 1):
    assert len(first) == len(second), (first, second)
    return tuple(a + factor * b for a, b in zip(first, second))
