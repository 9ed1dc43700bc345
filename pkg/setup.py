#!/usr/bin/env python

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

from setuptools import find_packages, setup

setup(
    name="isodouble",
    version="22.03.00",
    description="Clifford systems, FKM isoparametric families and doubles "
    "of spheres with positive scalar curvature",
    packages=find_packages(include=["isodouble", "isodouble.*"]),
    python_requires=">=3.8",
    install_requires=["numpy>=1.20", "scipy", "sympy"],
    extras_require={"test": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": ["isodouble=isodouble.cli:main"]},
)
