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

"""
isodouble
=========

Clifford systems, FKM isoparametric polynomials, doubles of the sphere
halves cut out by minimal isoparametric hypersurfaces, and the topology
of those doubles.

:meta private:
"""

from isodouble import clifford, doubling, fkm, random, topology
from isodouble.errors import *
from isodouble.report import VerificationReport, dumps
from isodouble.runtime import runtime
