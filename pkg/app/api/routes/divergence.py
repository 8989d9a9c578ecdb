from fastapi import APIRouter, HTTPException
import asyncio

from app.api.schemas import DivergenceRequest, SelectionRequest
from app.core.density.sample import Sample
from app.core.divergence.alpha_divergence import DivergenceOrder
from app.core.inference.model_selection import model_select
from app.exceptions import ConfigError, NumericalError
from app.services.experiment_service import ExperimentService
from app.utils.response_schema import success_response

router = APIRouter(prefix="/divergence", tags=["Divergence"])
service = ExperimentService()

@router.post("/estimate")
async def estimate(req: DivergenceRequest):
    try:
        order = DivergenceOrder(alpha=req.alpha)
        result = await asyncio.to_thread(
            service.divergence, req.dgp, req.model, req.n, order, req.seed, req.variance_convention
        )
        return success_response(data=result.model_dump(mode="json"))
    except ConfigError as e:
        raise HTTPException(status_code=422, detail=str(e))
    except NumericalError as e:
        raise HTTPException(status_code=500, detail=str(e))

@router.post("/select")
async def select(req: SelectionRequest):
    try:
        order = DivergenceOrder(alpha=req.alpha)
        sample = Sample(req.values, dgp="request")
        f1 = req.model1.build(req.variance_convention)
        f2 = req.model2.build(req.variance_convention)
        result = await asyncio.to_thread(
            model_select, sample, f1, f2, order, req.level, None, req.bandwidth
        )
        return success_response(data=result.model_dump(mode="json"))
    except ConfigError as e:
        raise HTTPException(status_code=422, detail=str(e))
    except NumericalError as e:
        raise HTTPException(status_code=500, detail=str(e))
