"""Plus/minus adequacy from circle counts of the extreme states."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram
from .errors import InternalInconsistency
from .states import circle_count


@dataclass(frozen=True)
class AdequacyReport:
    plus_adequate: bool
    minus_adequate: bool
    witness: int | None = None  # first crossing violating either condition

    @property
    def adequate(self) -> bool:
        return self.plus_adequate and self.minus_adequate


def check_adequacy(d: Diagram) -> AdequacyReport:
    """Plus adequate: the all-0 state has more circles than every one-flip
    neighbour; minus adequate dually from the all-1 state."""
    n = d.n
    all_zero = 0
    all_one = (1 << n) - 1
    c_zero = circle_count(d, all_zero)
    c_one = circle_count(d, all_one)
    plus, minus = True, True
    witness = None
    for i in range(n):
        flipped = circle_count(d, all_zero | (1 << i))
        if abs(c_zero - flipped) != 1:
            raise InternalInconsistency("one flip must change the circle count by 1")
        if flipped >= c_zero:
            plus = False
            if witness is None:
                witness = i
    for i in range(n):
        flipped = circle_count(d, all_one & ~(1 << i))
        if abs(c_one - flipped) != 1:
            raise InternalInconsistency("one flip must change the circle count by 1")
        if flipped >= c_one:
            minus = False
            if witness is None:
                witness = i
    return AdequacyReport(plus, minus, witness)
