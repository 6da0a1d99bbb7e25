"""Cooperative wall-clock deadlines for long exhaustive routines."""

from __future__ import annotations

import time
from contextlib import contextmanager
from contextvars import ContextVar

_deadline: ContextVar[float | None] = ContextVar("edgepowers_deadline", default=None)


class DeadlineExceeded(RuntimeError):
    pass


@contextmanager
def deadline(seconds: float | None):
    """Make :func:`check` raise once ``seconds`` have elapsed (``None``: no limit)."""
    token = _deadline.set(None if seconds is None else time.monotonic() + seconds)
    try:
        yield
    finally:
        _deadline.reset(token)


def check() -> None:
    limit = _deadline.get()
    if limit is not None and time.monotonic() > limit:
        raise DeadlineExceeded("per-task time budget exhausted")
