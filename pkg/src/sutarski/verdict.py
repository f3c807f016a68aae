"""Verifier verdicts: a boolean plus a machine-readable reason on failure."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def valid() -> Verdict:
    return Verdict(True)


def invalid(reason: str) -> Verdict:
    return Verdict(False, reason)
