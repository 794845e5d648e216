from pydantic import field_validator
from pydantic_settings import BaseSettings
from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Settings(BaseSettings):
    # Scalars
    prime: int = 101

    # Randomized suites
    seed: int = 1729
    corpus_size: int = 50

    # Logging
    log_level: str = "WARNING"

    @field_validator('prime')
    @classmethod
    def validate_prime(cls, v):
        # p**2 * dim must stay far below 2**63
        if not is_prime(v) or v >= 2 ** 15:
            raise ValueError(f"prime must be a prime below 32768, got {v}")
        return v

    @field_validator('corpus_size')
    @classmethod
    def validate_positive(cls, v):
        if v < 0:
            raise ValueError("must be non-negative")
        return v

    class Config:
        env_file = ".env"
        env_prefix = "DUOIDAL_"
        case_sensitive = False


@lru_cache()
def get_settings() -> Settings:
    return Settings()
