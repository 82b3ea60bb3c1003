"""Run configuration: resource budgets and reproducibility parameters.

Values come from three layers, later layers winning:

    built-in defaults  ->  config file (key=value lines)  ->  DIVCOR_* env vars

Defaults are sized for a laptop: at most a few GiB of arrays and a few
minutes per command.  All randomness-like choices (quasi-random offset,
Pollard-rho parameters) live here so that runs are reproducible from the
manifest alone.
"""

from __future__ import annotations

import dataclasses
import hashlib
import os
from dataclasses import dataclass

from .errors import DomainError

_ENV_PREFIX = "DIVCOR_"


@dataclass(frozen=True)
class Config:
    # sieve / table sizes
    max_sieve_n: int = 40_000_000
    # series terms for one-dimensional sums (Estermann, zeta identities)
    max_terms: int = 30_000_000
    # elementary enumeration steps for multi-variable loops
    max_enum_ops: int = 30_000_000_000
    # decimal digits allowed in exact rational intermediates
    max_rational_digits: int = 10_000
    # deterministic Pollard-rho: increments tried in order, fixed polynomial x^2+c
    rho_increments: tuple = (1, 2, 3, 5, 7, 11)
    # quasi-Monte-Carlo reproducibility: Halton index offset and seed tag
    qmc_offset: int = 64
    qmc_seed: int = 0
    # thread count accepted by the CLI; kernels are single-threaded and
    # deterministic, so this never changes results
    threads: int = 1

    def hash(self) -> str:
        """Short stable hash of the configuration for run manifests."""
        items = sorted(dataclasses.asdict(self).items())
        blob = repr(items).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


_INT_FIELDS = {
    "max_sieve_n",
    "max_terms",
    "max_enum_ops",
    "max_rational_digits",
    "qmc_offset",
    "qmc_seed",
    "threads",
}


def _coerce(name: str, raw: str):
    raw = raw.strip()
    if name in _INT_FIELDS:
        try:
            return int(raw)
        except ValueError:
            raise DomainError(f"config key {name!r}: expected integer, got {raw!r}")
    if name == "rho_increments":
        return tuple(int(t) for t in raw.split(","))
    raise DomainError(f"unknown config key {name!r}")


def load_config(path: str | None = None, env: dict | None = None) -> Config:
    """Build a Config from defaults, an optional key=value file, and env vars."""
    values = {}
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise DomainError(f"{path}:{lineno}: expected key=value")
                key, raw = line.split("=", 1)
                key = key.strip().lower()
                values[key] = _coerce(key, raw)
    env = os.environ if env is None else env
    for field in dataclasses.fields(Config):
        env_key = _ENV_PREFIX + field.name.upper()
        if env_key in env:
            values[field.name] = _coerce(field.name, env[env_key])
    cfg = Config(**values)
    if cfg.threads < 1:
        raise DomainError("threads must be >= 1")
    return cfg


DEFAULT = Config()
