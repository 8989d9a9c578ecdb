# app/utils/response_schema.py
from enum import Enum
from typing import Any, Dict, Optional
import numpy as np
from pydantic import BaseModel

from app.exceptions import AlphaDivException


def to_jsonable(obj: Any) -> Any:
    """
    Converts results into plain JSON values: pydantic models and enums are
    unwrapped, numpy scalars and arrays become Python numbers and lists, and
    non-finite floats (for example a standardized DI of +inf) become null.
    """
    if isinstance(obj, BaseModel):
        return to_jsonable(obj.model_dump())
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj) if np.isfinite(obj) else None
    return obj


def success_response(data: Any = None, meta: Optional[Dict] = None) -> Dict[str, Any]:
    return {
        "status": "success",
        "data": to_jsonable(data),
        "meta": to_jsonable(meta) or {},
    }


def error_response(message: str, error: Any = None, **kwargs) -> Dict[str, Any]:
    response = {
        "status": "error",
        "message": message,
        "error": str(error) if error else None,
    }
    if isinstance(error, AlphaDivException):
        response["exit_code"] = error.exit_code
    response.update(kwargs)
    return response
