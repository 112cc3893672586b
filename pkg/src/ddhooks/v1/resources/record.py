"""
Package: ddhooks
License: MIT
"""
from __future__ import annotations

import csv
import io
import json
from typing import Dict, TypeVar, Optional, Callable, Any, Iterable, List, Sequence


class Record(Dict):
    """
    A dictionary row of a command artifact. Values are already serialized (strings for exact
    rationals and decimal estimates, ints for counts), so JSON and CSV output are byte-stable.
    """

    def __init__(self, data: Optional[Dict[str, Any]] = None,
                 transform: Optional[Callable[[Dict[str, Any]], Dict[str, Any]]] = None):
        """
        Args:
            data (Dict[str, Any]): The row values.
            transform (Callable, optional): Applied to data before storing. Defaults to None.
        """
        data = dict(data or {})
        if transform is not None:
            if not callable(transform):
                raise TypeError("`transform` must be a callable function.")
            data = transform(data)
            if not isinstance(data, dict):
                raise ValueError("`transform` function must return a dictionary.")
        super().__init__(data)

    def __str__(self) -> str:
        return json.dumps(self, sort_keys=True)


TRecord = TypeVar('TRecord', bound=Record)


def render_json(records: Iterable[Dict[str, Any]], meta: Optional[Dict[str, Any]] = None) -> str:
    """
    Renders rows as an indented JSON document with sorted keys.

    Args:
        records (Iterable[Dict[str, Any]]): The rows, stored under "rows".
        meta (Dict[str, Any], optional): Top-level keys merged beside "rows". Defaults to None.

    Returns:
        str: The document followed by a newline.
    """
    document: Dict[str, Any] = {"rows": [dict(r) for r in records]}
    if meta:
        document.update(meta)
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def render_csv(records: Iterable[Dict[str, Any]], columns: Sequence[str]) -> str:
    """
    Renders rows as CSV with a header line and bare newline line endings.

    Args:
        records (Iterable[Dict[str, Any]]): The rows. Missing keys become empty cells.
        columns (Sequence[str]): Column order, also written as the header.

    Returns:
        str: The CSV text.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for record in records:
        writer.writerow([_cell(record.get(c)) for c in columns])
    return buffer.getvalue()


def _cell(value: Any) -> str:
    """
    Args:
        value (Any): A row value.

    Returns:
        str: Empty for None, compact JSON for lists and tuples, str(value) otherwise.
    """
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return json.dumps(list(value), separators=(",", ":"))
    return str(value)


def columns_of(records: List[Dict[str, Any]]) -> List[str]:
    """
    Args:
        records (List[Dict[str, Any]]): The rows.

    Returns:
        List[str]: Every key in order of first appearance across the rows.
    """
    seen: List[str] = []
    for record in records:
        for key in record:
            if key not in seen:
                seen.append(key)
    return seen
