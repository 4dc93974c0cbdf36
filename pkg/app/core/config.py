import os
from dotenv import load_dotenv

load_dotenv()

API_V1_STR: str = "/api/v1"
PROJECT_NAME: str = "Difference 2-Algebra Workbench"
PROJECT_DESCRIPTION: str = "Exact checks, constructions and conversions for difference algebras, 2-term difference A-infinity algebras and difference associative 2-algebras."
PROJECT_VERSION: str = "1.0.0"

FORMAT_VERSION: int = 1

DEFAULT_SEED: int = int(os.getenv("DIFFALG_DEFAULT_SEED", 0))
MAX_DIM: int = int(os.getenv("DIFFALG_MAX_DIM", 8))

ARITY_CAP: int = int(os.getenv("DIFFALG_ARITY_CAP", 3))
MAX_COCHAIN_DEGREE: int = int(os.getenv("DIFFALG_MAX_COCHAIN_DEGREE", 5))

MAX_VIOLATIONS_PER_TAG: int = int(os.getenv("DIFFALG_MAX_VIOLATIONS_PER_TAG", 8))
RANDOM_COEFF_BOUND: int = int(os.getenv("DIFFALG_RANDOM_COEFF_BOUND", 3))

LOG_LEVEL: str = os.getenv("DIFFALG_LOG_LEVEL", "WARNING")
