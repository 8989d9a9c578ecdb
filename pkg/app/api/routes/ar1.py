from fastapi import APIRouter, HTTPException
import asyncio

from app.api.schemas import Ar1Request
from app.core.ar1.process import Ar1Config
from app.core.divergence.alpha_divergence import DivergenceOrder
from app.exceptions import ConfigError, NumericalError
from app.services.experiment_service import ExperimentService
from app.utils.response_schema import success_response

router = APIRouter(prefix="/ar1", tags=["AR(1)"])
service = ExperimentService()

@router.post("/simulate")
async def simulate(req: Ar1Request):
    try:
        cfg = Ar1Config(phi=req.phi, mu=req.mu, sigma2=req.sigma2, n=req.n, seed=req.seed)
        result = await asyncio.to_thread(
            service.ar1, cfg, req.select, req.alt_phi, DivergenceOrder(alpha=req.alpha), req.level
        )
        return success_response(data=result)
    except ConfigError as e:
        raise HTTPException(status_code=422, detail=str(e))
    except NumericalError as e:
        raise HTTPException(status_code=500, detail=str(e))
