"""Run configuration: defaults, JSON config files and command-line flags.

Precedence, lowest first: DEFAULT_CONFIG, the "options" of a --config file,
explicit flags.
"""

from dataclasses import dataclass, field
from functools import reduce
import math

from bvquery.exceptions import ConfigError, EnumerationError
from bvquery.space.enumerations import BALANCED, check_mode
from bvquery.utils import read_json

DEFAULT_CONFIG = {
    "options": {
        "max_size": 2,
        # None means 2 * lcm(1..max_size).
        "K": None,
        "mode": BALANCED,
        "candidate_cap": 10 ** 6,
        "atom_cap": 10 ** 6,
        "seed": 0,
        "format": "json",
    },
}


def lcm_upto(n):
    return reduce(lambda a, b: a * b // math.gcd(a, b), range(1, n + 1), 1)


def default_K(max_size):
    return 2 * lcm_upto(max_size)


@dataclass
class RunConfig(object):
    theory: str = None
    max_size: int = 2
    K: int = None
    mode: str = BALANCED
    candidate_cap: int = 10 ** 6
    atom_cap: int = 10 ** 6
    seed: int = 0
    out: str = None
    format: str = "json"
    command: str = None
    arguments: dict = field(default_factory=dict)

    def validate(self):
        if self.max_size < 1:
            raise ConfigError("--max-size must be at least 1")
        if self.K is None:
            self.K = default_K(self.max_size)
        if self.K < 1:
            raise ConfigError("--K must be positive")
        check_mode(self.mode)
        if self.mode == BALANCED and self.K % lcm_upto(self.max_size):
            raise EnumerationError(
                "Balanced mode needs K divisible by lcm(1..%d) = %d, got %d" % (
                    self.max_size, lcm_upto(self.max_size), self.K))
        if self.format not in ("json", "text"):
            raise ConfigError("Unknown output format %r" % self.format)
        return self


def read_config(path):
    try:
        data = read_json(path)
    except (IOError, OSError, ValueError) as e:
        raise ConfigError("Cannot read config file %s: %s" % (path, e))
    options = data.get("options", {}) if isinstance(data, dict) else None
    if not isinstance(options, dict):
        raise ConfigError("Config file %s has no \"options\" object" % path)
    unknown = set(options) - set(DEFAULT_CONFIG["options"]) - set(["theory"])
    if unknown:
        raise ConfigError("Unknown options in %s: %s" % (
            path, ", ".join(sorted(unknown))))
    return options


def build_config(command, flags, config_path=None, arguments=None):
    '''Merge defaults, an optional config file and explicit flags.'''
    options = dict(DEFAULT_CONFIG["options"])
    if config_path:
        options.update(read_config(config_path))
    for key, value in flags.items():
        if value is not None:
            options[key] = value
    config = RunConfig(
        theory=options.get("theory"),
        max_size=int(options["max_size"]),
        K=None if options["K"] is None else int(options["K"]),
        mode=options["mode"],
        candidate_cap=int(options["candidate_cap"]),
        atom_cap=int(options["atom_cap"]),
        seed=int(options["seed"]),
        out=options.get("out"),
        format=options["format"],
        command=command,
        arguments=dict(arguments or {}),
    )
    return config.validate()
