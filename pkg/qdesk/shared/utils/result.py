from typing import Generic, Optional, TypeVar

import attr

T = TypeVar("T")


@attr.s(frozen=True)
class Result(Generic[T]):
    """
    Outcome of a check or of an operation which is allowed to fail softly.
    Callers inspect `success` before reading `value`; `error` carries the reason otherwise.
    """

    success: bool = attr.ib()
    value: Optional[T] = attr.ib(default=None)
    error: Optional[str] = attr.ib(default=None)

    @classmethod
    def ok(cls, value: Optional[T] = None) -> "Result[T]":
        return cls(success=True, value=value, error=None)

    @classmethod
    def fail(cls, error: str, value: Optional[T] = None) -> "Result[T]":
        return cls(success=False, value=value, error=error)

    def __bool__(self) -> bool:
        return self.success
