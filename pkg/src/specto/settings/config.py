from pydantic_settings import BaseSettings, SettingsConfigDict


class _Settings(BaseSettings):
    SPECTO_THREADS: int | None = None
    SPECTO_LOG_LEVEL: str = "WARNING"
    SPECTO_SEED: int = 20240601
    SPECTO_WORD_CAP: int = 10_000_000
    SPECTO_PRECISION_BITS: int = 4096
    SPECTO_ROOT_DPS: int = 60
    SPECTO_CW_ROUNDS: int = 60
    SPECTO_GRID_PER_AXIS: int = 512
    SPECTO_GRID_MAX_POINTS: int = 2**20
    SPECTO_MC_CHUNK: int = 32
    SPECTO_MAX_CLEARING_SUBSETS: int = 256

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


Settings = _Settings()
