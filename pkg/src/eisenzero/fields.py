"""Arithmetic data for Q and the nine class-number-one imaginary quadratic fields."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .special import QuadraticCharacter

#: the square-free D with h(Q(sqrt(-D))) = 1
CLASS_NUMBER_ONE_D = (1, 2, 3, 7, 11, 19, 43, 67, 163)

RATIONAL = "rational"
IMAGINARY_QUADRATIC = "imaginary_quadratic"


@dataclass(frozen=True)
class FieldSpec:
    """Field data driving every evaluator: discriminant, unit count, lattice
    generator, and the location of the critical line / real-zero window."""

    label: str
    kind: str
    D: int | None
    discriminant: int | None
    unit_count: int | None
    omega: complex | None
    critical_line_re: float
    real_zero_window: tuple[float, float]
    character: QuadraticCharacter | None

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONAL

    def __str__(self) -> str:
        return self.label


FIELD_Q = FieldSpec(
    label="Q",
    kind=RATIONAL,
    D=None,
    discriminant=None,
    unit_count=None,
    omega=None,
    critical_line_re=0.5,
    real_zero_window=(0.5, 1.0),
    character=None,
)


def _make_quadratic(D: int) -> FieldSpec:
    if D not in CLASS_NUMBER_ONE_D:
        raise DomainError(f"D={D} is not in the class-number-one list {CLASS_NUMBER_ONE_D}")
    if D % 4 in (1, 2):
        d = -4 * D
        omega = complex(0.0, math.sqrt(D))
    else:
        d = -D
        omega = complex(0.5, math.sqrt(D) / 2.0)
    w = 4 if D == 1 else (6 if D == 3 else 2)
    return FieldSpec(
        label=str(D),
        kind=IMAGINARY_QUADRATIC,
        D=D,
        discriminant=d,
        unit_count=w,
        omega=omega,
        critical_line_re=1.0,
        real_zero_window=(1.0, 2.0),
        character=QuadraticCharacter(d),
    )


QUADRATIC_FIELDS = {D: _make_quadratic(D) for D in CLASS_NUMBER_ONE_D}
ALL_FIELDS = (FIELD_Q,) + tuple(QUADRATIC_FIELDS[D] for D in CLASS_NUMBER_ONE_D)


def field_from_label(label: str) -> FieldSpec:
    """Resolve 'Q' or a D value ('1', '2', ..., '163') to its FieldSpec."""
    text = str(label).strip()
    if text.upper() == "Q":
        return FIELD_Q
    try:
        D = int(text)
    except ValueError:
        raise DomainError(f"unknown field label {label!r}") from None
    if D not in QUADRATIC_FIELDS:
        raise DomainError(f"D={D} is not in the class-number-one list {CLASS_NUMBER_ONE_D}")
    return QUADRATIC_FIELDS[D]
