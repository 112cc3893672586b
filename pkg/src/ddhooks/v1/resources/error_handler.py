"""
Package: ddhooks
License: MIT
"""
import json
import logging
import sys
from typing import Dict, Any, TextIO, Optional

from .errors import DDHooksError

logger = logging.getLogger(__name__)

ERROR_MESSAGES = {
    "not_doubled_distinct": "Partition is not doubled distinct",
    "malformed_array": "Two-rowed array does not map to a partition",
    "core_not_t_core": "Core has a hook length divisible by t",
    "order_mismatch": "Series truncation orders differ",
    "non_cancellation": "Odd radical part or denominator did not cancel",
    "domain_error": "Argument outside the domain of the function",
    "hypothesis_violated": "Asymptotic formula hypotheses do not hold",
    "parity_error": "Argument has the wrong parity",
    "incompatible_statistic": "Statistic is not defined over this partition class",
    "degenerate_distribution": "Distribution has zero variance",
    "oracle_mismatch": "Generating function disagrees with enumeration",
    "verification_failed": "Verification sweep found mismatches",
    "invalid_argument": "Invalid argument",
}

EXIT_CODES = {
    "non_cancellation": 3,
    "oracle_mismatch": 3,
    "verification_failed": 3,
}


class ErrorHandler:
    """
    Renders exceptions raised by a command as the JSON error shape {code, message, context}
    and maps them to process exit statuses.

    Attributes:
        raise_on_error (bool): Whether to re-raise instead of rendering.
    """

    def __init__(self, raise_on_error: bool = False, stream: Optional[TextIO] = None):
        """
        Args:
            raise_on_error (bool): Re-raise handled exceptions. Defaults to False.
            stream (TextIO): Where error JSON is written. Defaults to stderr.
        """
        self.__raise_on_error: bool = raise_on_error
        self.__stream = stream

    def report(self, error: Exception) -> Dict[str, Any]:
        """
        Builds the error document for an exception.

        Args:
            error (Exception): The exception raised by a command.

        Returns:
            Dict[str, Any]: The {code, message, context} document.
        """
        if isinstance(error, DDHooksError):
            document = error.to_dict()
        elif isinstance(error, (TypeError, ValueError)):
            document = {"code": "invalid_argument", "message": str(error), "context": {}}
        else:
            raise error
        if not document["message"]:
            document["message"] = ERROR_MESSAGES.get(document["code"], document["code"])
        return document

    def handler(self, error: Exception) -> int:
        """
        Handles an exception raised by a command.

        Args:
            error (Exception): The exception.

        Returns:
            int: The exit status for the process.
        """
        if self.__raise_on_error:
            raise error
        document = self.report(error)
        logger.debug("command failed: %s", document["code"])
        stream = self.__stream or sys.stderr
        stream.write(json.dumps(document, sort_keys=True) + "\n")
        return EXIT_CODES.get(document["code"], 2 if isinstance(error, DDHooksError) else 1)

    @property
    def raise_on_error(self) -> bool:
        """Gets whether exceptions are re-raised."""
        return self.__raise_on_error

    @raise_on_error.setter
    def raise_on_error(self, raise_on_error: bool):
        """Sets whether exceptions are re-raised."""
        self.__raise_on_error = raise_on_error
