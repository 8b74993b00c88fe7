from .config import settings
from .errors import InvalidInputError, ResourceCapExceeded

__all__ = ["settings", "InvalidInputError", "ResourceCapExceeded"]
