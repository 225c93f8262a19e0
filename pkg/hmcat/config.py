"""Compute profiles bundling every tunable of a run.

Profiles come from built-in factories, YAML files, ``HMCAT_*`` environment
variables and CLI flags. Precedence: explicit profile path > CLI flags >
environment > defaults.
"""

import os
from dataclasses import dataclass, fields, replace
from enum import Enum
from pathlib import Path
from typing import Any

import yaml

from .cohomology.cochains import CoboundarySign
from .errors import StructureError
from .lincat.matrices import DEFAULT_DENSE_THRESHOLD
from .lincat.scalars import Field

DEFAULT_CONFIG_DIR = Path.home() / ".config" / "hmcat"
PROFILE_DIRS = (DEFAULT_CONFIG_DIR / "profiles", Path(__file__).parent / "profiles")


class TransversalMode(Enum):
    """How orbit representatives are chosen.

    LOWEST_INDEX: the first object of each orbit in document order
    PREFERRED: objects listed in the document's ``transversal`` section first
    """

    LOWEST_INDEX = "lowest-index"
    PREFERRED = "preferred"


class OutputFormat(Enum):
    """How results are printed.

    TABLE: rich tables on the console
    YAML: key-ordered YAML
    JSON: indented JSON
    """

    TABLE = "table"
    YAML = "yaml"
    JSON = "json"


ENV_VARS = {
    "field": "HMCAT_FIELD",
    "max_degree": "HMCAT_MAX_DEGREE",
    "max_basis_size": "HMCAT_MAX_BASIS_SIZE",
    "parallel": "HMCAT_PARALLEL",
    "seed": "HMCAT_SEED",
}


@dataclass
class ComputeProfile:
    """Every tunable of a computation or verification run."""

    name: str
    description: str = ""

    field: int = 5
    max_degree: int = 3
    dense_threshold: int = DEFAULT_DENSE_THRESHOLD
    max_basis_size: int = 8192
    cup_check_limit: int = 400

    coboundary_sign: CoboundarySign = CoboundarySign.STANDARD
    transversal: TransversalMode = TransversalMode.PREFERRED

    parallel: int = 4
    seed: int = 0
    random_instances: int = 100

    output_format: OutputFormat = OutputFormat.TABLE

    @property
    def base_field(self) -> Field:
        return Field(self.field)

    @classmethod
    def default(cls) -> "ComputeProfile":
        return cls(name="default", description="Degrees up to 3 over F5 with a moderate budget")

    @classmethod
    def quick(cls) -> "ComputeProfile":
        """Small degree bound and budget for smoke runs."""
        return cls(
            name="quick",
            description="Degrees up to 2, small budget, few random instances",
            max_degree=2,
            max_basis_size=2048,
            cup_check_limit=100,
            random_instances=20,
        )

    @classmethod
    def thorough(cls) -> "ComputeProfile":
        return cls(
            name="thorough",
            description="Degrees up to 3, large budget, exhaustive cup checks",
            max_degree=3,
            max_basis_size=40000,
            cup_check_limit=5000,
            parallel=8,
            random_instances=300,
        )

    @classmethod
    def from_yaml(cls, path: str | Path) -> "ComputeProfile":
        path = Path(path).expanduser().resolve()
        if not path.exists():
            raise FileNotFoundError(f"Profile file not found: {path}")
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
        return cls.from_dict(data or {})

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ComputeProfile":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known - {"profile"}
        if unknown:
            raise ValueError(f"Unknown profile keys: {', '.join(sorted(unknown))}")
        values: dict[str, Any] = {k: v for k, v in data.items() if k in known}
        values["name"] = data.get("profile", data.get("name", "custom"))
        if "field" in values:
            values["field"] = Field.parse(values["field"]).characteristic
        if "coboundary_sign" in values:
            values["coboundary_sign"] = CoboundarySign(values["coboundary_sign"])
        if "transversal" in values:
            values["transversal"] = TransversalMode(values["transversal"])
        if "output_format" in values:
            values["output_format"] = OutputFormat(values["output_format"])
        return cls(**values)

    def to_dict(self) -> dict[str, Any]:
        return {
            "profile": self.name,
            "description": self.description,
            "field": self.field,
            "max_degree": self.max_degree,
            "dense_threshold": self.dense_threshold,
            "max_basis_size": self.max_basis_size,
            "cup_check_limit": self.cup_check_limit,
            "coboundary_sign": self.coboundary_sign.value,
            "transversal": self.transversal.value,
            "parallel": self.parallel,
            "seed": self.seed,
            "random_instances": self.random_instances,
            "output_format": self.output_format.value,
        }

    def with_env(self, env: dict[str, str] | None = None) -> "ComputeProfile":
        """Override fields from ``HMCAT_*`` variables."""
        env = dict(os.environ) if env is None else env
        updates: dict[str, Any] = {}
        for key, var in ENV_VARS.items():
            raw = env.get(var)
            if raw is None or raw == "":
                continue
            try:
                updates[key] = Field.parse(raw).characteristic if key == "field" else int(raw)
            except (ValueError, StructureError) as e:
                raise ValueError(f"{var}={raw!r} is not valid: {e}") from e
        return replace(self, **updates)

    @classmethod
    def from_env(cls, env: dict[str, str] | None = None) -> "ComputeProfile":
        env = dict(os.environ) if env is None else env
        base = load_profile(env["HMCAT_PROFILE"]) if env.get("HMCAT_PROFILE") else cls.default()
        return base.with_env(env)

    @classmethod
    def load(
        cls,
        profile: str | None = None,
        env: dict[str, str] | None = None,
        **overrides: Any,
    ) -> "ComputeProfile":
        """Resolve a profile: explicit profile path > CLI overrides > env vars > defaults.

        ``overrides`` are CLI values; None means the flag was not given.
        """
        if profile and Path(profile).expanduser().is_file():
            return cls.from_yaml(profile)
        base = load_profile(profile).with_env(env) if profile else cls.from_env(env)
        given = {k: v for k, v in overrides.items() if v is not None}
        if "field" in given:
            given["field"] = Field.parse(given["field"]).characteristic
        return replace(base, **given)


BUILTIN_PROFILES = {
    "default": ComputeProfile.default,
    "quick": ComputeProfile.quick,
    "thorough": ComputeProfile.thorough,
}


def load_profile(name_or_path: str) -> ComputeProfile:
    """Load a profile by built-in name, file path, or name under a profile directory.

    Raises:
        ValueError: If nothing matches.
    """
    if name_or_path in BUILTIN_PROFILES:
        return BUILTIN_PROFILES[name_or_path]()

    path = Path(name_or_path).expanduser()
    if path.exists():
        return ComputeProfile.from_yaml(path)

    for profile_dir in PROFILE_DIRS:
        yaml_path = profile_dir / f"{name_or_path}.yaml"
        if yaml_path.exists():
            return ComputeProfile.from_yaml(yaml_path)

    raise ValueError(
        f"Unknown profile: {name_or_path}. Use one of {', '.join(BUILTIN_PROFILES)} or a path to a YAML file."
    )


def list_profiles() -> list[str]:
    names = set(BUILTIN_PROFILES)
    for profile_dir in PROFILE_DIRS:
        if profile_dir.is_dir():
            names.update(p.stem for p in profile_dir.glob("*.yaml"))
    return sorted(names)
