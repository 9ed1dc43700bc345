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

from enum import IntEnum, unique

ISODOUBLE_PKG_NAME = "isodouble"

# Environment variables consulted by the runtime
ISODOUBLE_SEED_VAR = "ISODOUBLE_SEED"
ISODOUBLE_TOLERANCE_VAR = "ISODOUBLE_TOLERANCE"
ISODOUBLE_WORKERS_VAR = "ISODOUBLE_WORKERS"
ISODOUBLE_WARN_VAR = "ISODOUBLE_WARN"

DEFAULT_SEED = 42

# Residual tolerances of the individual checks
CLIFFORD_TOL = 1e-12
CARTAN_MUNZNER_TOL = 1e-9
LEVEL_TOL = 1e-10
SPECTRUM_TOL = 1e-6
POSITIVITY_TOL = 1e-9
INDEX_TRACE_TOL = 1e-6

# Eigenvalue clustering
CLUSTER_REL_GAP = 1e-3
CLUSTER_SEPARATION = 10.0

# Newton projection budget
NEWTON_MAX_ITER = 100
NEWTON_MAX_RESTARTS = 10
NEWTON_MAX_STEP = 0.25

# Monte-Carlo samples are drawn in fixed-size chunks, each chunk with its
# own child seed, so that results never depend on the worker count
SAMPLE_CHUNK = 256

# Bending curve: fraction of the bend spent on the two smoothstep ramps
BEND_RAMP_FRACTION = 0.2
BEND_TAIL_LENGTH = 0.25

# Largest ambient dimension 2l handled by the dense constructions
MAX_AMBIENT_DIM = 256

# Isoparametric families only exist for these numbers of principal
# curvatures (Muenzner)
ALLOWED_G = (1, 2, 3, 4, 6)


@unique
class Side(IntEnum):
    PLUS = 1
    MINUS = -1


@unique
class Ring(IntEnum):
    INTEGERS = 0
    MOD2 = 2


@unique
class Space(IntEnum):
    M_PLUS = 0
    M_MINUS = 1
    Y = 2
    D_PLUS = 3
    D_MINUS = 4


@unique
class Verdict(IntEnum):
    DISTINCT = 0
    INCONCLUSIVE = 1
    INAPPLICABLE = 2


@unique
class ExitCode(IntEnum):
    PASS = 0
    FAIL = 1
    USAGE = 2


@unique
class FamilyKind(IntEnum):
    NONE = 0
    HOMOGENEOUS = 1
    FKM = 2
    HOMOGENEOUS_AND_FKM = 3
    UNCLASSIFIED = 4


# Text forms used in reports and on the command line
RING_NAMES = {Ring.INTEGERS: "Z", Ring.MOD2: "Z2"}
SIDE_NAMES = {Side.PLUS: "plus", Side.MINUS: "minus"}
SPACE_NAMES = {
    Space.M_PLUS: "M_plus",
    Space.M_MINUS: "M_minus",
    Space.Y: "Y",
    Space.D_PLUS: "D_plus",
    Space.D_MINUS: "D_minus",
}
VERDICT_NAMES = {
    Verdict.DISTINCT: "distinct",
    Verdict.INCONCLUSIVE: "inconclusive",
    Verdict.INAPPLICABLE: "inapplicable",
}
