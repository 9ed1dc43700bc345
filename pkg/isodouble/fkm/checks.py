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

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from isodouble.config import CARTAN_MUNZNER_TOL, SAMPLE_CHUNK
from isodouble.random import nonzero_points, spawn
from isodouble.report import VerificationReport
from isodouble.runtime import runtime

__all__ = ("cartan_munzner_check",)

logger = logging.getLogger(__name__)


def _chunk_residuals(poly, rng, count):
    Z = nonzero_points(rng, count, poly.dim)
    r2 = np.einsum("si,si->s", Z, Z)
    _, grad, lap = poly.evaluate(Z)
    grad_res = np.abs(np.einsum("si,si->s", grad, grad) / (16 * r2**3) - 1)
    lap_ratio = lap / r2

    U = Z / np.sqrt(r2)[:, np.newaxis]
    F, grad_u, _ = poly.evaluate(U)
    tangent = grad_u - 4 * F[:, np.newaxis] * U
    sph_res = np.abs(
        np.einsum("si,si->s", tangent, tangent) - 16 * (1 - F * F)
    )
    return Z, grad_res, lap_ratio, sph_res


def cartan_munzner_check(
    poly, samples=1000, seed=None, tol=None, workers=None
):
    """
    Check the Cartan-Münzner equations for ``F`` at random points.

    Three criteria are evaluated:

    * ``|grad F|^2 = 16 |z|^6`` on nonzero points of ``R^{2l}``,
    * ``Delta F / |z|^2`` is the constant ``8 (m- - m+)``,
    * ``|grad_S f|^2 = 16 (1 - f^2)`` on the unit sphere.

    Parameters
    ----------
    poly : FKMPolynomial
    samples : int
        Number of random points; drawn in chunks with independent child
        seeds, so the result does not depend on `workers`.
    seed : int, optional
        Master seed, the runtime default when omitted.
    tol : float, optional
        Acceptance threshold, ``1e-9`` by default.
    workers : int, optional
        Threads evaluating chunks in parallel.

    Returns
    -------
    out : VerificationReport
        Failing criteria record the worst point.
    """
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    tol = runtime.tolerance(CARTAN_MUNZNER_TOL) if tol is None else tol
    seed = runtime.resolve_seed(seed)
    workers = runtime.workers if workers is None else max(int(workers), 1)

    num_chunks = math.ceil(samples / SAMPLE_CHUNK)
    counts = [
        min(SAMPLE_CHUNK, samples - i * SAMPLE_CHUNK)
        for i in range(num_chunks)
    ]
    rngs = spawn(seed, num_chunks)

    def run(args):
        return _chunk_residuals(poly, *args)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(run, zip(rngs, counts)))
    else:
        chunks = [run(args) for args in zip(rngs, counts)]
    logger.debug(
        "evaluated %d points in %d chunks on %d workers",
        samples,
        num_chunks,
        workers,
    )

    Z = np.concatenate([c[0] for c in chunks])
    grad_res = np.concatenate([c[1] for c in chunks])
    lap_ratio = np.concatenate([c[2] for c in chunks])
    sph_res = np.concatenate([c[3] for c in chunks])

    expected = 8 * (poly.m_minus - poly.m_plus)
    lap_res = np.abs(lap_ratio - expected) / max(1, abs(expected))

    details = []
    for name, residuals, extra in (
        ("gradient_norm", grad_res, {}),
        (
            "laplacian",
            lap_res,
            {
                "expected": expected,
                "mean": float(lap_ratio.mean()),
                "spread": float(lap_ratio.max() - lap_ratio.min()),
            },
        ),
        ("spherical_gradient", sph_res, {}),
    ):
        worst = int(np.argmax(residuals))
        record = {
            "criterion": name,
            "residual": float(residuals[worst]),
            "pass": bool(residuals[worst] <= tol),
            **extra,
        }
        if not record["pass"]:
            record["point"] = Z[worst].tolist()
        details.append(record)

    worst_residual = max(record["residual"] for record in details)
    return VerificationReport(
        check_name="cartan_munzner",
        passed=worst_residual <= tol,
        worst_residual=worst_residual,
        tolerance=tol,
        samples=samples,
        seed=seed,
        details=tuple(details),
    )
