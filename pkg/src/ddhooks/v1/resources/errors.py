"""
Package: ddhooks
License: MIT
"""
from __future__ import annotations

import json
from typing import Any, Dict, Optional


class DDHooksError(Exception):
    """
    Base class for every contract violation raised by the package.

    Attributes:
        code (str): Stable machine readable identifier.
        message (str): Human readable description.
        context (Dict[str, Any]): Values that identify the failing input.
    """
    code: str = "ddhooks_error"

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.__message = message
        self.__context = dict(context or {})

    @property
    def message(self) -> str:
        return self.__message

    @property
    def context(self) -> Dict[str, Any]:
        return dict(self.__context)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "code": self.code,
            "message": self.__message,
            "context": {k: _jsonable(v) for k, v in self.__context.items()},
        }

    def __str__(self) -> str:
        if not self.__context:
            return self.__message
        return f"{self.__message} {json.dumps(self.to_dict()['context'], sort_keys=True)}"


def _jsonable(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return str(value)


class NotDoubledDistinct(DDHooksError):
    code = "not_doubled_distinct"


class MalformedArray(DDHooksError):
    code = "malformed_array"


class CoreNotTCore(DDHooksError):
    code = "core_not_t_core"


class OrderMismatch(DDHooksError):
    code = "order_mismatch"


class NonCancellation(DDHooksError):
    code = "non_cancellation"


class DomainError(DDHooksError, ValueError):
    code = "domain_error"


class HypothesisViolated(DDHooksError):
    code = "hypothesis_violated"


class ParityError(DDHooksError):
    code = "parity_error"


class IncompatibleStatistic(DDHooksError):
    code = "incompatible_statistic"


class DegenerateDistribution(DDHooksError):
    code = "degenerate_distribution"


class OracleMismatch(DDHooksError):
    code = "oracle_mismatch"


class VerificationFailed(DDHooksError):
    code = "verification_failed"
