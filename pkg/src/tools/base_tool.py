from abc import ABC, abstractmethod
from typing import Dict, Any


class BaseTool(ABC):
    """One job type of the toolkit; requests are dicts carrying a "command" key."""

    command: str = ""

    def __init__(self, name: str, description: str):
        self.name = name
        self.description = description

    def can_handle(self, request: Dict[str, Any]) -> bool:
        return request.get("command") == self.command

    @abstractmethod
    def run(self, request: Dict[str, Any]) -> Dict[str, Any]:
        pass
