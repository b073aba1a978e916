from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field

from omega_ideals.logging_config import get_logger

logger = get_logger(__name__)


class Settings(BaseModel):
    max_power: int = Field(default=4, ge=1, description="Largest m in omega-linear power tables.")
    edge_powers: int = Field(default=3, ge=1, description="Largest m for edge-ideal power reports.")
    vertex_cap: int = Field(default=16, ge=1, description="Vertex limit of the exhaustive cover enumeration.")
    closure_power_cap: int = Field(default=4, ge=1, description="Largest k tried by the closure membership oracle.")
    sweep_count: int = Field(default=2000, ge=1, description="Ideals drawn for an oracle sweep.")
    sweep_max_exponent: int = Field(default=4, ge=1)
    sweep_max_generators: int = Field(default=5, ge=1)
    sweep_variables: int = Field(default=3, ge=1)


def load_settings(path: Optional[str | Path] = None) -> Settings:
    """Settings from a JSON file; a missing file means the defaults."""
    if path is None or not Path(path).is_file():
        if path is not None:
            logger.info(f"No settings file at {path}, using defaults")
        return Settings()
    return Settings.model_validate_json(Path(path).read_text())
