"""Shared CLI plumbing: input loading, quandle arguments and output rendering."""

import argparse
import csv
import io
from pathlib import Path
from typing import Any, NamedTuple

import orjson
from pydantic import BaseModel, ValidationError

from errors import UsageError
from homology.chains import XSetAction, checkerboard_action
from models import CommandResult, QuandleModel
from quandles.core import FiniteQuandle, GoodInvolution, dihedral_quandle, quandle_from_table
from quandles.cosets import TildeExtension, build_tilde_r
from settings import Config, settings


class QuandleSource(NamedTuple):
    name: str
    quandle: FiniteQuandle
    rho: GoodInvolution | None
    extension: TildeExtension | None


def load_json(path: str) -> Any:
    try:
        return orjson.loads(Path(path).read_bytes())
    except FileNotFoundError:
        raise UsageError(f"file not found: {path}") from None
    except orjson.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def load_model(path: str, model: type[BaseModel]) -> BaseModel:
    try:
        return model.model_validate(load_json(path))
    except ValidationError as exc:
        raise UsageError(f"{path} does not match the {model.__name__} schema: {exc.errors()[0]['msg']}") from None


def load_models(path: str, model: type[BaseModel]) -> list:
    data = load_json(path)
    if not isinstance(data, list):
        raise UsageError(f"{path} must contain a JSON list")
    try:
        return [model.model_validate(item) for item in data]
    except ValidationError as exc:
        raise UsageError(f"{path} does not match the {model.__name__} schema: {exc.errors()[0]['msg']}") from None


def parse_quandle_arg(source: str, config: Config = settings) -> QuandleSource:
    """``tilde:N``, ``dihedral:M`` or a path to a quandle JSON file."""
    family, _, arg = source.partition(":")
    if family in ("tilde", "dihedral"):
        try:
            n = int(arg)
        except ValueError:
            raise UsageError(f"quandle source {source!r} needs an integer parameter") from None
        if family == "tilde":
            ext = build_tilde_r(n, max_elements=config.MAX_ELEMENTS)
            return QuandleSource(source, ext.quandle, ext.rho, ext)
        Q = dihedral_quandle(n)
        return QuandleSource(source, Q, GoodInvolution(tuple(range(Q.size))), None)
    model = load_model(source, QuandleModel)
    Q = quandle_from_table(model.table, model.labels)
    rho = GoodInvolution(tuple(model.rho)) if model.rho is not None else None
    return QuandleSource(source, Q, rho, None)


def y_action(args: argparse.Namespace, Q: FiniteQuandle) -> XSetAction | None:
    return checkerboard_action(Q) if getattr(args, "checkerboard", False) else None


def ok(command: str, payload: Any, summary: str) -> CommandResult:
    return CommandResult(status="ok", command=command, payload=payload, summary=summary)


def _csv_rows(payload: Any) -> list[list[Any]]:
    if isinstance(payload, dict) and "table" in payload and "labels" in payload:
        return [["◁", *payload["labels"]]] + [[label, *row] for label, row in zip(payload["labels"], payload["table"])]
    if isinstance(payload, list) and payload and all(isinstance(item, dict) for item in payload):
        header = list(payload[0])
        return [header] + [[item.get(key) for key in header] for item in payload]
    if isinstance(payload, dict):
        rows = [["key", "value"]]
        for key, value in payload.items():
            if isinstance(value, (dict, list)):
                value = orjson.dumps(value, option=orjson.OPT_SORT_KEYS).decode()
            rows.append([key, value])
        return rows
    if isinstance(payload, list):
        return [[item] for item in payload]
    return [[payload]]


def render(result: CommandResult, fmt: str) -> str:
    data = result.model_dump()
    if fmt == "pretty":
        body = orjson.dumps(data["payload"], option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2).decode()
        return f"{result.summary}\n{body}"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(_csv_rows(data["payload"]))
        return buffer.getvalue().rstrip("\n")
    return orjson.dumps(data, option=orjson.OPT_SORT_KEYS).decode()
