from fastapi import APIRouter, HTTPException
import asyncio

from app.api.schemas import ExperimentRequest
from app.config import settings
from app.exceptions import ConfigError, NumericalError
from app.services.experiment_service import ExperimentService
from app.utils.response_schema import success_response

router = APIRouter(prefix="/experiment", tags=["Experiment"])
service = ExperimentService()

@router.post("/run")
async def run(req: ExperimentRequest):
    try:
        cfg = req.config
        if req.mode in settings.EXECUTION_MODES:
            cfg = cfg.model_copy(update=settings.EXECUTION_MODES[req.mode])
        rows, _, _ = await asyncio.to_thread(service.run_table, cfg, "json")
        return success_response(data=rows, meta={"name": cfg.name, "replications": cfg.replications})
    except ConfigError as e:
        raise HTTPException(status_code=422, detail=str(e))
    except NumericalError as e:
        raise HTTPException(status_code=500, detail=str(e))
