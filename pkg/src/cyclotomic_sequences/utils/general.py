# -*- coding: utf-8 -*-
"""General utilies."""
from __future__ import annotations

from typing import Any, List, Sequence


def recursive_merge(left: dict, right: dict) -> dict:
    """Recursively merge the ``right`` dictionary into the ``left`` dictionary.

    Values of ``right`` take precedence; nested dictionaries are merged rather than replaced.

    :param left: base dictionary, modified in place.
    :param right: dictionary with values that should take precedence.
    :return: the merged dictionary.
    """
    import collections.abc

    for key, value in right.items():
        if isinstance(value, collections.abc.Mapping):
            left[key] = recursive_merge(left.get(key, {}), value)
        else:
            left[key] = value

    return left


def chunk_tasks(tasks: Sequence[Any], n_chunks: int) -> List[List[Any]]:
    """Split the ordered ``tasks`` into at most ``n_chunks`` contiguous chunks of near-equal size.

    The first chunks hold one extra task when the division is not exact. Empty chunks are dropped, so fewer tasks than
    chunks gives one task per chunk.

    :param tasks: the ordered tasks.
    :param n_chunks: the maximum number of chunks.
    :return: list of chunks that concatenate back to ``tasks``.
    :raises ValueError: if ``n_chunks`` is not positive.
    """
    if n_chunks < 1:
        raise ValueError(f'the number of chunks should be positive, got {n_chunks}')

    size, remainder = divmod(len(tasks), n_chunks)
    chunks = []
    start = 0

    for index in range(min(n_chunks, len(tasks))):
        stop = start + size + (index < remainder)
        chunks.append(list(tasks[start:stop]))
        start = stop

    return chunks
