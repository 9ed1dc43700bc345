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

"""Exceptions and warnings raised by isodouble."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class SingularLevelError(DomainError):
    """A level ``|f| >= 1`` was requested; it lies on a focal submanifold."""

    def __init__(self, f):
        super().__init__(
            f"level f={f!r} is singular (focal submanifold), need |f| < 1"
        )
        self.f = f


class InapplicableCriterion(ValueError):
    """The hypotheses of a criterion do not hold for the given input."""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class InfeasibleGeometry(ValueError):
    """A bending curve cannot be fitted into the requested region."""

    def __init__(self, msg, min_r_bar, min_k_max=None):
        super().__init__(msg)
        self.min_r_bar = min_r_bar
        self.min_k_max = min_k_max


class ConsistencyError(RuntimeError):
    pass


class ConvergenceError(RuntimeError):
    pass


class UnsupportedError(NotImplementedError):
    pass


class DomainWarning(UserWarning):
    pass
