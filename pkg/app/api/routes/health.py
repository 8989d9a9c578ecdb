from fastapi import APIRouter
import os
import platform

import numpy as np
import pandas as pd
import psutil
import scipy

from app.config import settings

router = APIRouter(tags=["Health"])

@router.get("/health")
def health_check():
    return {"status": "ok", "app": settings.APP_NAME, "version": settings.APP_VERSION}

@router.get("/status")
def system_status():
    """Process footprint plus the numeric stack and defaults the estimates depend on."""
    process = psutil.Process(os.getpid())
    return {
        "status": "online",
        "python": platform.python_version(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "pandas": pd.__version__,
        "n_jobs": settings.N_JOBS,
        "cpu_count": psutil.cpu_count(),
        "memory_usage_mb": round(process.memory_info().rss / 1024 / 1024, 2),
        "defaults": {
            "alpha": settings.DEFAULT_ALPHA,
            "level": settings.DEFAULT_LEVEL,
            "quadrature_points": settings.QUADRATURE_POINTS,
        },
    }
