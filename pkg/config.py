import json
import os
from typing import Dict

from objects import CaseList, OutputFormat, DEFAULT_PRIME, CROSS_CHECK_PRIME

SEED_ENV = "PHANTOM_SEED"


class InterpolationConfigMixin:
    def __init__(self, interp_config_js, **kwargs):
        super().__init__(**kwargs)
        self.prime: int = int(interp_config_js.get("prime", DEFAULT_PRIME))
        self.cross_check_prime: int = int(interp_config_js.get("cross_check_prime", CROSS_CHECK_PRIME))
        self.max_point_retries: int = int(interp_config_js.get("max_point_retries", 16))
        self.case_list_str: str = interp_config_js.get("case_list", CaseList.Krah.value)
        self.case_list: CaseList = CaseList.from_str(self.case_list_str)
        if self.prime == self.cross_check_prime:
            raise ValueError(f"Invalid cross_check_prime: must differ from prime {self.prime}")
        if self.max_point_retries < 1:
            raise ValueError(f"Invalid max_point_retries: {self.max_point_retries}")


class SystemsConfigMixin:
    def __init__(self, systems_config_js, **kwargs):
        super().__init__(**kwargs)
        self.split_workers: int = int(systems_config_js.get("split_workers", 1))
        self.curve_n: int = int(systems_config_js.get("curve_n", 3))
        if self.curve_n < 3:
            raise ValueError(f"Invalid curve_n: {self.curve_n}. Curves in |-nF| need n >= 3")


class ReportConfigMixin:
    def __init__(self, report_config_js, **kwargs):
        super().__init__(**kwargs)
        self.output_format_str: str = report_config_js.get("output_format", OutputFormat.JSON.value)
        if self.output_format_str not in OutputFormat.names():
            raise ValueError(
                f"Invalid output_format: {self.output_format_str}")
        self.output_format: OutputFormat = OutputFormat(self.output_format_str)
        self.output_path: str | None = report_config_js.get("output_path", None)


class RuntimeConfigMixin:
    def __init__(self, runtime_config_js, **kwargs):
        super().__init__(**kwargs)
        env_seed = os.environ.get(SEED_ENV)
        default_seed = int(env_seed) if env_seed is not None else 42
        self.seed: int = int(runtime_config_js.get("seed", default_seed))
        self.workers: int = int(runtime_config_js.get("workers", 1))
        self.progress: bool = bool(runtime_config_js.get("progress", False))
        self.log_level: str = runtime_config_js.get("log_level", "INFO")
        self.log_file: str | None = runtime_config_js.get("log_file", None)
        if self.workers < 1:
            raise ValueError(f"Invalid workers: {self.workers}")


class Config(InterpolationConfigMixin, SystemsConfigMixin, ReportConfigMixin, RuntimeConfigMixin):

    @staticmethod
    def from_dict(d):
        return Config(d)

    def to_dict(self):
        return self.raw_config

    @staticmethod
    def from_file(config_filepath):
        with open(config_filepath) as f:
            config_js = json.load(f)
        return Config.from_dict(config_js)

    def __init__(self, config_js: Dict | None = None):
        config_js = dict() if config_js is None else config_js
        super().__init__(interp_config_js=config_js,
                         systems_config_js=config_js,
                         report_config_js=config_js,
                         runtime_config_js=config_js)
        self.raw_config = config_js

    def override(self, **kwargs) -> 'Config':
        d = dict(self.raw_config)
        for k, v in kwargs.items():
            if v is not None:
                d[k] = v
        return Config.from_dict(d)

    def resolved(self) -> Dict:
        return {
            "prime": self.prime,
            "cross_check_prime": self.cross_check_prime,
            "max_point_retries": self.max_point_retries,
            "case_list": self.case_list.value,
            "split_workers": self.split_workers,
            "curve_n": self.curve_n,
            "output_format": self.output_format.value,
            "output_path": self.output_path,
            "seed": self.seed,
            "workers": self.workers,
            "progress": self.progress,
            "log_level": self.log_level,
            "log_file": self.log_file,
        }
