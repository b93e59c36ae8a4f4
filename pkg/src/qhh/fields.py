"""Ground-field characteristics.

Every matrix in this package has integer entries, so ranks only depend on
the characteristic: rationals for 0, integers mod p otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class CharSpec:
    value: int = 0

    def __post_init__(self):
        if self.value != 0 and not is_prime(self.value):
            raise ValueError(f"characteristic must be 0 or a prime, got {self.value}")

    @classmethod
    def parse(cls, text: str | int) -> CharSpec:
        return cls(int(text))

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def divides(self, n: int) -> bool:
        """Whether n vanishes in the field (never, in characteristic 0)."""
        return self.value != 0 and n % self.value == 0

    def __str__(self):
        return str(self.value)


def as_char(ch: CharSpec | int) -> CharSpec:
    return ch if isinstance(ch, CharSpec) else CharSpec(ch)


@dataclass(frozen=True)
class ExactField:
    """Q when ``characteristic == 0``, GF(p) otherwise."""

    characteristic: int = 0

    def __post_init__(self):
        CharSpec(self.characteristic)

    @classmethod
    def of(cls, ch: CharSpec | int) -> ExactField:
        return cls(as_char(ch).value)

    def rank(self, matrix) -> int:
        from .linalg import rank

        return rank(matrix, self.characteristic)
