from pydantic import BaseModel
import os
import json

DEFAULT_CONFIG_PATH = "mckay_config.json"


class Settings(BaseModel):
    field_size_bound: int = 2 ** 20
    label_enumeration_bound: int = 81
    class_scale_bound: int = 10 ** 5
    gu3_max_q: int = 7
    max_jobs: int = 1
    log_level: str = "WARNING"
    output_dir: str = ""  # defaults to the working directory

    def __init__(self, **data):
        super().__init__(**data)
        if not self.output_dir:
            self.output_dir = os.getcwd()

    @classmethod
    def load(cls, config_path: str = "") -> "Settings":
        config_path = config_path or os.getenv("MCKAY_LABELS_CONFIG", DEFAULT_CONFIG_PATH)
        if os.path.exists(config_path):
            with open(config_path, "r") as f:
                data = json.load(f)
                return cls(**data)
        return cls()


settings = Settings.load()
