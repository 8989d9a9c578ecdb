# app/config.py
import os
from dotenv import load_dotenv

load_dotenv(override=True)

class Settings:
    # 1. App Info
    APP_NAME = "AlphaDiv"
    APP_VERSION = "1.0.0"
    DEBUG = os.getenv("DEBUG", "False").lower() == "true"

    # 2. Base Paths
    BASE_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
    OUTPUT_DIR = os.getenv("ALPHADIV_OUTPUT_DIR", os.path.join(BASE_DIR, "results"))
    CONFIG_DIR = os.path.join(BASE_DIR, "configs")
    LOG_DIR = os.getenv("ALPHADIV_LOG_DIR", os.path.join(BASE_DIR, "logs"))
    LOG_TO_FILE = os.getenv("ALPHADIV_LOG_TO_FILE", "True").lower() == "true"

    # 3. Divergence Defaults
    DEFAULT_ALPHA = float(os.getenv("ALPHADIV_ALPHA", "0.5"))
    DEFAULT_LEVEL = float(os.getenv("ALPHADIV_LEVEL", "0.05"))
    DEFAULT_BETA = 0.5 # rate exponent of the bandwidth schedule check

    # 4. Quadrature
    QUADRATURE_BOUNDS = (-12.0, 12.0)
    QUADRATURE_POINTS = 8193 # odd, composite Simpson
    QUADRATURE_SPAN_SIGMAS = 12.0
    BOUNDARY_MASS_WARNING = 1e-8
    KDE_CHECK_POINTS = 4096
    KDE_PAD_BANDWIDTHS = 10.0
    KDE_CHUNK_SIZE = 1024 # grid points per vectorized KDE block

    # 5. Experiment Harness
    SAMPLE_SIZES = [20, 100, 300, 500, 1000, 1500, 2000]
    N_JOBS = int(os.getenv("ALPHADIV_N_JOBS", "1"))
    FIGURE_GRID_POINTS = 512
    FIGURE_BINS = 40
    SCHEDULE_BOUNDS = (0.01, 1.0)

    EXECUTION_MODES = {
        "desk": {
            "replications": 200,
        },
        "full": {
            "replications": 1000,
        }
    }

    # Environment override for the master seed of every experiment
    SEED_ENV_VAR = "ALPHADIV_SEED"

    def seed_override(self):
        """Reads ALPHADIV_SEED at call time so late environment changes are honoured."""
        raw = os.getenv(self.SEED_ENV_VAR)
        if raw is None or raw.strip() == "":
            return None
        return int(raw)

settings = Settings()
