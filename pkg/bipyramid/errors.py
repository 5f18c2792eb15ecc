"""
例外クラス

ValueError 系 = 入力エラー（CLI 終了コード 2）
RuntimeError 系 = 内部不変条件違反（CLI 終了コード 1）
"""
from typing import Optional


class BipyramidError(Exception):
    pass


class DiagramError(BipyramidError, ValueError):
    """ダイアグラムの構文・検証エラー"""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        location: Optional[str] = None,
        source: Optional[str] = None,
    ):
        self.message = message
        self.line = line
        self.column = column
        self.location = location
        self.source = source
        super().__init__(message)

    def __str__(self) -> str:
        where = []
        if self.source:
            where.append(self.source)
        if self.line is not None:
            where.append(f"line {self.line} column {self.column}")
        if self.location:
            where.append(self.location)
        if not where:
            return self.message
        return f"{', '.join(where)}: {self.message}"


class SurfaceMismatchError(DiagramError):
    pass


class InadmissibleSequenceError(BipyramidError, ValueError):
    def __init__(self, reason: str, index: Optional[int] = None):
        self.reason = reason
        self.index = index
        super().__init__(f"inadmissible sequence: {reason}")


class LimitExceededError(BipyramidError, ValueError):
    pass


class InvariantViolation(BipyramidError, RuntimeError):
    pass
