from dataclasses import dataclass


@dataclass(frozen=True)
class Config:
    # the determinant route is an O(i^3) oracle with huge rationals
    determinant_cap: int = 16
    default_degree: int = 24
    schema_version: int = 1


DEFAULT = Config()
