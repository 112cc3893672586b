"""
Package: ddhooks
License: MIT
"""
from __future__ import annotations

from typing import Union, TypeVar, Optional

from .settings import Settings


class Command:
    """
    A node in the command tree. The root owns the run settings; children reach them through the
    parent chain.

    Attributes:
        __parent (Command | None): The parent command.
        __name (str): The name of the command.
    """

    def __init__(self, parent: Union[Command, None], name: str, settings: Optional[Settings] = None):
        """
        Args:
            parent (Command | None): The parent command.
            name (str): The command name.
            settings (Settings, optional): Only meaningful on the root.
        """
        if not isinstance(name, str):
            raise TypeError(f"Expected 'name' to be a string, got {type(name).__name__}")

        if parent is not None and not isinstance(parent, Command):
            raise TypeError(f"Expected 'parent' to be a Command or None, got {type(parent).__name__}")

        if settings is not None and not isinstance(settings, Settings):
            raise TypeError(f"Expected 'settings' to be Settings, got {type(settings).__name__}")

        self.__parent = parent
        self.__name = name
        self.__settings = settings

    @property
    def _name(self) -> str:
        """Gets the name of the command."""
        return self.__name

    @property
    def _path(self) -> str:
        """
        The full command path, root first.

        Returns:
            str: e.g. "ddhooks dist".
        """
        visited = set()
        path = self.__name
        parent = self.__parent

        while parent is not None:
            if id(parent) in visited:
                raise ValueError("Cyclic parent reference detected.")
            visited.add(id(parent))
            path = f"{parent._name} {path}"
            parent = parent.__parent
        return path

    @property
    def _settings(self) -> Settings:
        """Gets the settings of the root command."""
        node = self
        while node.__parent is not None:
            node = node.__parent
        if node.__settings is None:
            node.__settings = Settings()
        return node.__settings


TCommand = TypeVar('TCommand', bound=Command)
