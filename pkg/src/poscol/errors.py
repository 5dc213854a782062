"""Shared error types and resource limits."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field


class GraphInputError(ValueError):
    """Malformed graph, colouring or instance input."""


class BudgetExceededError(RuntimeError):
    """A search exceeded its node or wall-clock budget.

    Raised instead of returning a possibly wrong answer; callers that can
    live with partial results must catch it explicitly.
    """


_ENV_NODE = "POS_NODE_LIMIT"
_ENV_TIME = "POS_TIME_LIMIT"


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    return int(raw) if raw else None


def _env_float(name: str) -> float | None:
    raw = os.environ.get(name)
    return float(raw) if raw else None


@dataclass
class Limits:
    """Search budgets: ``node_limit`` counts search steps, ``time_limit`` is seconds.

    ``None`` means unlimited.  Environment variables POS_NODE_LIMIT and
    POS_TIME_LIMIT provide process-wide defaults.
    """

    node_limit: int | None = field(default_factory=lambda: _env_int(_ENV_NODE))
    time_limit: float | None = field(default_factory=lambda: _env_float(_ENV_TIME))
    induced_path_steps: int = 10_000_000

    def ticker(self) -> "BudgetTicker":
        return BudgetTicker(self)


class BudgetTicker:
    """Mutable countdown over a :class:`Limits`; one per search invocation."""

    __slots__ = ("nodes_left", "deadline", "_check_every", "_until_check")

    def __init__(self, limits: Limits):
        self.nodes_left = limits.node_limit
        self.deadline = (
            time.monotonic() + limits.time_limit if limits.time_limit else None
        )
        # time checks are batched: syscalls on every node would dominate
        self._check_every = 4096
        self._until_check = self._check_every

    def tick(self, n: int = 1) -> None:
        if self.nodes_left is not None:
            self.nodes_left -= n
            if self.nodes_left < 0:
                raise BudgetExceededError("node limit exceeded")
        if self.deadline is not None:
            self._until_check -= 1
            if self._until_check <= 0:
                self._until_check = self._check_every
                if time.monotonic() > self.deadline:
                    raise BudgetExceededError("time limit exceeded")


DEFAULT_LIMITS = Limits()
