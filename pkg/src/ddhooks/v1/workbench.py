"""
Package: ddhooks
License: MIT
"""
from typing import Optional

from .endpoints import Asymp, Decompose, Dist, Hooks, Moments, Series, Verify
from .resources import Command, ErrorHandler, Settings


class Workbench(Command):
    """
    Root of the command tree. Every subcommand is an endpoint object reachable as a property and
    sharing this workbench's settings.
    """
    __error_handler: ErrorHandler
    __hooks: Hooks
    __decompose: Decompose
    __series: Series
    __dist: Dist
    __moments: Moments
    __asymp: Asymp
    __verify: Verify

    def __init__(self, settings: Optional[Settings] = None):
        super().__init__(None, "ddhooks", settings or Settings.from_environment())

        # Render errors as JSON unless asked to re-raise.
        self.__error_handler = ErrorHandler()

        self.__hooks = Hooks(self, "hooks")
        self.__decompose = Decompose(self, "decompose")
        self.__series = Series(self, "series")
        self.__dist = Dist(self, "dist")
        self.__moments = Moments(self, "moments")
        self.__asymp = Asymp(self, "asymp")
        self.__verify = Verify(self, "verify")

    @property
    def hooks(self) -> Hooks:
        return self.__hooks

    @property
    def decompose(self) -> Decompose:
        return self.__decompose

    @property
    def series(self) -> Series:
        return self.__series

    @property
    def dist(self) -> Dist:
        return self.__dist

    @property
    def moments(self) -> Moments:
        return self.__moments

    @property
    def asymp(self) -> Asymp:
        return self.__asymp

    @property
    def verify(self) -> Verify:
        return self.__verify

    @property
    def settings(self) -> Settings:
        return self._settings

    @property
    def error_handler(self) -> ErrorHandler:
        return self.__error_handler

    @error_handler.setter
    def error_handler(self, error_handler: ErrorHandler):
        if not isinstance(error_handler, ErrorHandler):
            raise TypeError(f"Expected 'error_handler' to be an ErrorHandler, got {type(error_handler).__name__}")
        self.__error_handler = error_handler
