from functools import lru_cache

from dotenv import load_dotenv
from pydantic_settings import BaseSettings

load_dotenv()


class Settings(BaseSettings):
    # Realization (環境変数 BIPYR_MAX_SUM で上書き)
    max_sum: int = 40000

    # Census
    census_max_n: int = 12
    census_workers: int = 1  # 1 = プロセスプールを使わない

    # シグネチャを定義どおり数える版と差分配列版を突き合わせる（デバッグ用）
    verify_constructions: bool = True

    # Logging
    log_level: str = "WARNING"

    class Config:
        env_file = ".env"
        env_prefix = "BIPYR_"
        extra = "ignore"


@lru_cache
def get_settings() -> Settings:
    return Settings()
