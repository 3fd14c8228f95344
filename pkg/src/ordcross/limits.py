"""Size guards for exhaustive enumeration.

The defaults keep every exhaustive routine at desk scale.  Pass a modified
``Limits`` (or ``force=True`` where offered) to go further.
"""

from dataclasses import dataclass, replace

from .errors import ConfigurationError


@dataclass(frozen=True)
class Limits:
    on_max: int = 10            # enumerate_on
    tn_partition_max: int = 6   # set partitions of T_n
    tree_max: int = 12          # enumerate_decreasing / shapes
    brute_r_max: int = 5
    brute_l_max: int = 4
    oracle_size_max: int = 64   # semigroup isomorphism search
    budget: float | None = None  # seconds, None = unbounded

    def unlocked(self):
        big = 10**6
        return replace(self, on_max=big, tn_partition_max=big, tree_max=big,
                       brute_r_max=big, brute_l_max=big, oracle_size_max=big)


DEFAULT_LIMITS = Limits()


def check(value, cap, what):
    if value > cap:
        raise ConfigurationError(
            f"{what}: n={value} exceeds the configured cap {cap}; "
            "raise the limit or use force")
