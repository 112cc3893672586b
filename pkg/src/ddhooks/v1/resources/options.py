"""
Package: ddhooks
License: MIT
"""
from enum import Enum
from fractions import Fraction
from typing import TypeVar, Dict, Any, List

from .parameter import Parameter, format_rational


class Options:
    """
    The normalized flag set of one command run. Rendering it gives the invocation line that
    reproduces the run.
    """
    _options: Dict[str, Any]

    def __init__(self, command: str):
        if not isinstance(command, str):
            raise TypeError(f"Expected 'command' to be a string, got {type(command).__name__}")
        self._command = command
        self._options = {}

    @property
    def command(self) -> str:
        return self._command

    def clear(self) -> None:
        """
        Clears all options.
        """
        self._options.clear()

    def add_option(self, key: str, value: Any) -> None:
        """
        Adds a flag with validation.

        Args:
            key (str): The flag name without leading dashes.
            value (Any): The flag value.

        Raises:
            TypeError: If the value type is not supported.
        """
        if value is None:
            return

        if not isinstance(value, (str, list, Enum, int, Fraction, bool, Parameter)):
            raise TypeError(f"Unsupported type for option value: {type(value).__name__}")
        self._options[key] = value

    def get(self, key: str, default: Any = None) -> Any:
        return self._options.get(key, default)

    def _format_value(self, key: str, value: Any) -> List[str]:
        """
        Formats a single flag for the invocation line.

        Args:
            key (str): The flag name.
            value: The value to format.

        Returns:
            List[str]: The argv tokens.
        """
        flag = f"--{key.replace('_', '-')}"
        if isinstance(value, bool):
            return [flag] if value else []
        elif isinstance(value, Parameter):
            return [flag, str(value)]
        elif isinstance(value, list) and value:
            return [flag] + [self._format_scalar(v) for v in value]
        elif isinstance(value, list):
            return []
        return [flag, self._format_scalar(value)]

    @staticmethod
    def _format_scalar(value: Any) -> str:
        if isinstance(value, Enum):
            return str(value.value)
        if isinstance(value, Fraction):
            return format_rational(value)
        return str(value)

    @property
    def argv(self) -> List[str]:
        tokens = [self._command]
        for key in sorted(self._options):
            tokens.extend(self._format_value(key, self._options[key]))
        return tokens

    def __str__(self) -> str:
        """
        Converts the options into the reproducing invocation line.

        Returns:
            str: The invocation line.
        """
        return " ".join(["ddhooks"] + self.argv)


TOptions = TypeVar("TOptions", bound=Options)
