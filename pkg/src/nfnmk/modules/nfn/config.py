"""Configuration for the neuro-fuzzy module."""

from pydantic import BaseModel, Field, field_validator

from nfnmk.modules.common import TrainConfig

from .som import SomSchedule


class NfnConfig(BaseModel):
    """Defaults of the two-phase NFN-MK training.

    Registered in ConfigRepository under the `nfn` section; experiment files override any field.
    """

    model_name: str = Field(default="NFN-MK", min_length=1, description="Name in comparisons")
    domains: list[tuple[float, float]] = Field(
        default_factory=lambda: [(-10.0, 10.0), (-10.0, 10.0)],
        min_length=1,
        description="Closed domain of every input",
    )
    som: SomSchedule = Field(default_factory=SomSchedule)
    som_seed: int = Field(default=0, description="SOM shuffle seed; input i uses som_seed + i")
    train: TrainConfig = Field(default_factory=TrainConfig)

    @field_validator("domains")
    @classmethod
    def validate_domains(cls, v: list[tuple[float, float]]) -> list[tuple[float, float]]:
        """Every domain must satisfy min < max."""
        for lo, hi in v:
            if not lo < hi:
                raise ValueError(f"domain ({lo}, {hi}) must satisfy min < max")
        return v
