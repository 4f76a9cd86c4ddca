from pydantic_settings import BaseSettings


class Settings(BaseSettings):

    APP_TITLE: str = "Conic Regularity Analyzer"
    APP_DESCRIPTION: str = "Smoothness, regularity and singular locus of B[X,Y]/(aX^2+bXY+cY^2-1)"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False

    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    MAX_RING_DEGREE: int = 16
    GF2_DEGREE_CAP: int = 64
    EXAMPLE14_MAX_PRIME: int = 50

    ORACLE_DEGREE_BOUND: int = 2
    ORACLE_SAMPLES: int = 200
    ORACLE_SEED: int = 20240101
    ORACLE_COEFF_RANGE: int = 8
    ORACLE_MAX_FIELD_ORDER: int = 64

    CELERY_BROKER_URL: str = "memory://"
    CELERY_RESULT_BACKEND: str = "cache+memory://"
    CELERY_TASK_ALWAYS_EAGER: bool = True

    class Config:
        env_file = ".env"
        case_sensitive = True


settings = Settings()
