# app/main.py
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from app.config import settings
from app.logger import logger
from app.api.routes import health, divergence, ar1, experiment
from app.exceptions import AlphaDivException
from app.utils.response_schema import error_response

app = FastAPI(
    title=f"{settings.APP_NAME} API",
    description="Alpha-divergence estimation, goodness-of-fit and model-selection tests",
    version=settings.APP_VERSION
)

# Global Request Logger
@app.middleware("http")
async def log_requests(request: Request, call_next):
    logger.info(f"API: Incoming {request.method} {request.url.path}")
    try:
        response = await call_next(request)
        logger.info(f"API: Outgoing Status {response.status_code}")
        return response
    except Exception as e:
        logger.error(f"API: Middleware Error: {e}")
        return JSONResponse(status_code=500, content=error_response("Internal Server Error", e))

@app.get("/ping")
async def ping():
    return {"status": "online", "message": f"{settings.APP_NAME} is reachable!"}

@app.exception_handler(AlphaDivException)
async def alphadiv_exception_handler(request: Request, exc: AlphaDivException):
    status = 422 if exc.exit_code == 2 else 500
    logger.error(f"Unhandled {type(exc).__name__}: {exc}")
    return JSONResponse(status_code=status, content=error_response(type(exc).__name__, exc))

@app.get("/")
async def root():
    return {
        "message": f"Welcome to {settings.APP_NAME} API",
        "status": "online",
        "version": settings.APP_VERSION,
    }

app.include_router(health.router)
app.include_router(divergence.router)
app.include_router(ar1.router)
app.include_router(experiment.router)
