from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """Outcome of a checker: truthy on success, otherwise the first violation.

    Only the fields meaningful for a given checker are filled in; ``path_index``
    is 1-based when set.
    """

    ok: bool
    reason: str = ""
    path_index: int | None = None
    step: int | None = None
    invariant: int | str | None = None
    side: str | None = None
    where: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok

    def render(self) -> str:
        if self.ok:
            return "OK"
        idx = "-" if self.path_index is None else str(self.path_index)
        return f"FAIL {idx} {self.reason}"


OK = Verdict(True)


def fail(reason: str, **where) -> Verdict:
    return Verdict(False, reason, **where)
