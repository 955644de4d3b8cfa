"""HTTP service wrapping the signature/obstruction library.

The FastAPI app lives in :mod:`cgsig.service.app`; the request/response
models in :mod:`cgsig.service.models`; the transport-independent handlers in
:mod:`cgsig.service.handlers` (the CLI calls these directly when no server is
configured).
"""

from .app import create_app

__all__ = ["create_app"]
