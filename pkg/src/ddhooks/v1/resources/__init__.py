from .command import Command, TCommand
from .error_handler import ErrorHandler, ERROR_MESSAGES
from .errors import (DDHooksError, NotDoubledDistinct, MalformedArray, CoreNotTCore, OrderMismatch, NonCancellation,
                     DomainError, HypothesisViolated, ParityError, IncompatibleStatistic, DegenerateDistribution,
                     OracleMismatch, VerificationFailed)
from .options import Options, TOptions
from .parameter import Parameter, RationalParameter, format_rational, format_decimal
from .record import Record, TRecord, render_json, render_csv, columns_of
from .settings import Settings

__all__ = ['Command', 'TCommand', 'ErrorHandler', 'ERROR_MESSAGES', 'DDHooksError', 'NotDoubledDistinct',
           'MalformedArray', 'CoreNotTCore', 'OrderMismatch', 'NonCancellation', 'DomainError', 'HypothesisViolated',
           'ParityError', 'IncompatibleStatistic', 'DegenerateDistribution', 'OracleMismatch', 'VerificationFailed',
           'Options', 'TOptions', 'Parameter', 'RationalParameter', 'format_rational', 'format_decimal', 'Record',
           'TRecord', 'render_json', 'render_csv', 'columns_of', 'Settings']
