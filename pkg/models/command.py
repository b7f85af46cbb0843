from typing import Any, Literal

from pydantic import BaseModel


class CommandResult(BaseModel):
    status: Literal["ok", "error"]
    command: str
    payload: Any = None
    summary: str = ""
