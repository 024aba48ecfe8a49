from .app import app
from .ops import ServiceError

__all__ = ["app", "ServiceError"]
