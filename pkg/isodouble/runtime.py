# Copyright 2022 isodouble developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

import os
import sys
import warnings

from .config import (
    DEFAULT_SEED,
    ISODOUBLE_SEED_VAR,
    ISODOUBLE_TOLERANCE_VAR,
    ISODOUBLE_WARN_VAR,
    ISODOUBLE_WORKERS_VAR,
)
from .utils import find_last_user_stacklevel


def _env_int(name, default):
    value = os.environ.get(name)
    if value is None or value == "":
        return default
    try:
        return int(value)
    except ValueError:
        raise RuntimeError(f"{name} must be an integer, got {value!r}")


def _env_float(name, default):
    value = os.environ.get(name)
    if value is None or value == "":
        return default
    try:
        return float(value)
    except ValueError:
        raise RuntimeError(f"{name} must be a number, got {value!r}")


class Runtime(object):
    __slots__ = [
        "default_seed",
        "tolerance_override",
        "warning",
        "workers",
    ]

    def __init__(self):
        self.default_seed = _env_int(ISODOUBLE_SEED_VAR, DEFAULT_SEED)
        if not 0 <= self.default_seed < 2**64:
            raise RuntimeError(
                f"{ISODOUBLE_SEED_VAR} must be a 64-bit unsigned integer"
            )
        self.tolerance_override = _env_float(ISODOUBLE_TOLERANCE_VAR, None)
        self.workers = max(_env_int(ISODOUBLE_WORKERS_VAR, 1), 1)
        self.warning = os.environ.get(ISODOUBLE_WARN_VAR, "1") != "0"
        self._parse_command_args()

    def _parse_command_args(self):
        try:
            # Prune it out so the application does not see it
            sys.argv.remove("-isodouble:nowarn")
            self.warning = False
        except ValueError:
            pass
        try:
            # Prune it out so the application does not see it
            sys.argv.remove("-isodouble:warn")
            self.warning = True
        except ValueError:
            pass
        try:
            idx = sys.argv.index("-isodouble:workers")
        except ValueError:
            return
        if idx + 1 >= len(sys.argv):
            raise RuntimeError(
                "Please provide a worker count after -isodouble:workers"
            )
        self.workers = max(int(sys.argv[idx + 1]), 1)
        sys.argv = sys.argv[:idx] + sys.argv[idx + 2 :]

    def tolerance(self, default):
        """Return the tolerance override when one is set, else `default`."""
        if self.tolerance_override is None:
            return default
        return self.tolerance_override

    def resolve_seed(self, seed):
        if seed is None:
            return self.default_seed
        seed = int(seed)
        if not 0 <= seed < 2**64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
        return seed

    def warn(self, msg, category=UserWarning):
        if not self.warning:
            return
        stacklevel = find_last_user_stacklevel()
        warnings.warn(msg, stacklevel=stacklevel, category=category)


runtime = Runtime()
