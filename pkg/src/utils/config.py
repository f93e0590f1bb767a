import os
import json
import math
import logging
from datetime import datetime
from dotenv import load_dotenv
load_dotenv()


# Project root (where "src", "schemas" and "reports" live)
BASE_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))

PARAMETER_PATH = os.path.join(BASE_DIR, "src", "calculation", "toolkit_parameters.json")
SCHEMA_DIR = os.path.join(BASE_DIR, "schemas")


def load_parameters(path: str = PARAMETER_PATH) -> dict:
    with open(path, encoding="utf-8") as f:
        return json.load(f)


PARAMETERS = load_parameters()

# === Environment Configuration ===

# Default output directory for `run` (reports + manifest)
OUTPUT_DIR = os.getenv("FRACLT_OUTPUT_DIR", os.path.join(BASE_DIR, "reports"))

# Logging configuration
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_DIR = os.getenv("LOG_DIR", os.path.join(BASE_DIR, "logs"))
LOG_TO_FILE = os.getenv("FRACLT_LOG_TO_FILE", "1") == "1"

TOOLKIT_VERSION = "0.3.0"

# === Numerical defaults ===

# Quadrature
QUAD_TOL = PARAMETERS["quadrature"]["tolerance"]
CROSS_CHECK_TOL = PARAMETERS["quadrature"]["cross_check_tolerance"]
QUAD_LIMIT = PARAMETERS["quadrature"]["subdivision_limit"]

# Eigen kernel
EIG_TOL = PARAMETERS["eigen"]["residual_tolerance"]
CLASSIFICATION_FLOOR = PARAMETERS["eigen"]["classification_floor"]
HERMITIAN_ATOL = PARAMETERS["eigen"]["hermitian_atol"]

# Dense algebra stays feasible below this many grid points
GRID_CAP = int(os.getenv("FRACLT_GRID_CAP", PARAMETERS["grid"]["cap"]))
BOX_TO_SUPPORT_RATIO = PARAMETERS["grid"]["box_to_support_ratio"]

# Regularized determinants
GAMMA_OVERRIDES = {int(n): float(v) for n, v in PARAMETERS["determinant"]["gamma"].items()}
A_OVER_OMEGA = PARAMETERS["determinant"]["a_over_omega"]

# omega search of the shifted resolvent bound
ETA_TARGET = PARAMETERS["omega"]["eta_target"]
OMEGA_CAP = PARAMETERS["omega"]["cap"]

# Lieb-Thirring checks
TAU_DEFAULT = PARAMETERS["lieb_thirring"]["tau_default"]
TAU_SWEEP = tuple(PARAMETERS["lieb_thirring"]["tau_sweep"])
FAMILY_SCALES = tuple(PARAMETERS["lieb_thirring"]["family_scales"])
FAMILY_DRIFT_FACTOR = PARAMETERS["lieb_thirring"]["family_drift_factor"]

# BGK envelope sampling
BGK_RADII = tuple(PARAMETERS["bgk"]["radii"])
BGK_ANGLES = PARAMETERS["bgk"]["angles"]
BGK_NORMALIZATION_TOL = PARAMETERS["bgk"]["normalization_tolerance"]

# Batch runs
WORKERS = int(os.getenv("FRACLT_WORKERS", PARAMETERS["run"]["workers"]))
SCHEMA_VERSION = PARAMETERS["run"]["schema_version"]


def gamma_constant(n: int) -> float:
    """Gamma_n of the regularized determinant growth bound.

    Gamma_1 = 1 and Gamma_2 = 1/2; for n >= 3 the literature value e(2 + log n)
    unless the parameter file overrides it.
    """
    if n < 1:
        raise ValueError(f"determinant order must be >= 1, got {n}")
    if n in GAMMA_OVERRIDES:
        return GAMMA_OVERRIDES[n]
    return math.e * (2.0 + math.log(n))


def setup_logger(name: str = "src", level=LOG_LEVEL) -> logging.Logger:
    """Sets up and returns a configured logger."""
    logger = logging.getLogger(name)
    logger.setLevel(level)

    if not logger.handlers:
        # Format for console and file logs
        formatter = logging.Formatter(
            "[%(asctime)s] [%(levelname)s] %(name)s: %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S"
        )

        # Console handler
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        # Optional file handler
        if LOG_TO_FILE:
            os.makedirs(LOG_DIR, exist_ok=True)
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            file_path = os.path.join(LOG_DIR, f"log_{timestamp}.log")
            file_handler = logging.FileHandler(file_path, encoding="utf-8")
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

    return logger
