from pydantic import BaseModel, ConfigDict, Field


class ScreenlabConfig(BaseModel):
    """Numerical defaults shared by every screenlab computation."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    tolerance: float = Field(1e-8, alias="tol", gt=0, description="Series and quadrature tolerance.")
    shell_cap_n2: int = Field(400, alias="shell_cap_n2", ge=1, description="F± shell cap for n = 2.")
    shell_cap_n3: int = Field(120, alias="shell_cap_n3", ge=1, description="F± shell cap for n = 3.")
    shell_cap_default: int = Field(40, alias="shell_cap", ge=1, description="F± shell cap for n >= 4.")
    factorial_cap: int = Field(10, alias="factorial_cap", ge=1, description="Largest n for full S_n tables.")
    matrix_column_cap: int = Field(4096, alias="matrix_columns", ge=1, description="Cap on rank^n for symmetrizer matrices.")
    truncation: int = Field(6, alias="truncation", ge=0, description="Default N0-degree truncation in the VOA.")
    jobs: int = Field(1, alias="jobs", ge=1, description="Worker count for parallel maps.")
    seed: int = Field(0, alias="seed", ge=0, description="Monte Carlo seed.")
    sample_cap: int = Field(10_000_000, alias="sample_cap", ge=1, description="Monte Carlo sample cap.")
    node_budget: int = Field(4_000_000, alias="node_budget", ge=1, description="Quadrature node budget.")

    def shell_cap_for(self, n: int) -> int:
        if n <= 2:
            return self.shell_cap_n2
        if n == 3:
            return self.shell_cap_n3
        return self.shell_cap_default
