"""Configuration for the benchmark module."""

from pydantic import BaseModel, Field, model_validator


class BenchConfig(BaseModel):
    """Dataset grid and comparison-table defaults, registered under the `bench` section."""

    n_per_axis: int = Field(default=15, ge=2, description="Grid points per input axis")
    domain: tuple[float, float] = Field(default=(-10.0, 10.0), description="Grid bounds")
    include_published: bool = Field(
        default=False, description="Also list the published NFN-MK and NN rows in comparisons"
    )

    @model_validator(mode="after")
    def validate_domain(self) -> "BenchConfig":
        """定義域は min < max でなければならない"""
        lo, hi = self.domain
        if not lo < hi:
            raise ValueError(f"domain ({lo}, {hi}) must satisfy min < max")
        return self
