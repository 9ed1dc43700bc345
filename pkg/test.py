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

import argparse
import datetime
import glob
import multiprocessing
import os
import subprocess
import sys

# draw tests from these directories
isodouble_tests = sorted(glob.glob("tests/*.py"))

red = "\033[1;31m"
green = "\033[1;32m"
clear = "\033[0m"


def run_test(test_file, flags, env, root_dir, verbose):
    test_path = os.path.join(root_dir, test_file)
    command = [sys.executable, test_path] + flags
    if verbose:
        print(*command)
        sys.stdout.flush()
    out = None if verbose else subprocess.DEVNULL
    try:
        subprocess.check_call(
            command, env=env, cwd=root_dir, stdout=out, stderr=out
        )
        return True, test_file
    except (OSError, subprocess.CalledProcessError):
        return False, test_file


def report_result(stage_name, result):
    (passed, test_file) = result

    if passed:
        print("[%sPASS%s] (%s) %s" % (green, clear, stage_name, test_file))
        return 1
    else:
        print("[%sFAIL%s] (%s) %s" % (red, clear, stage_name, test_file))
        return 0


def run_stage(stage_name, root_dir, flags, env, verbose, workers):
    if workers is None:
        workers = 1 if verbose else multiprocessing.cpu_count()

    total_pass = 0
    if workers == 1:
        for test_file in isodouble_tests:
            result = run_test(test_file, flags, env, root_dir, verbose)
            total_pass += report_result(stage_name, result)
    else:
        with multiprocessing.Pool(workers) as pool:
            results = [
                pool.apply_async(
                    run_test, (test_file, flags, env, root_dir, verbose)
                )
                for test_file in isodouble_tests
            ]
            for result in results:
                total_pass += report_result(stage_name, result.get())

    print(
        "%24s: Passed %4d of %4d tests (%5.1f%%)"
        % (
            stage_name,
            total_pass,
            len(isodouble_tests),
            float(100 * total_pass) / max(len(isodouble_tests), 1),
        )
    )
    return total_pass


class Stage(object):
    __slots__ = ["name", "begin_time"]

    def __init__(self, name):
        self.name = name

    def __enter__(self):
        self.begin_time = datetime.datetime.now()
        print()
        print("#" * 60)
        print("### Entering Stage: %s" % self.name)
        print("#" * 60)
        print()
        sys.stdout.flush()

    def __exit__(self, exc_type, exc_val, exc_tb):
        end_time = datetime.datetime.now()
        print()
        print("#" * 60)
        print("### Exiting Stage: %s" % self.name)
        print("###   * Exception Type: %s" % exc_type)
        print("###   * Elapsed Time: %s" % (end_time - self.begin_time))
        print("#" * 60)
        print()
        sys.stdout.flush()


def run_tests(
    use=None,
    threads=2,
    root_dir=None,
    verbose=False,
    options=(),
    workers=None,
):
    if root_dir is None:
        root_dir = os.path.dirname(os.path.realpath(__file__))
    use = use or ["serial"]

    print()
    print("#" * 60)
    print("###")
    print("### Test Suite Configuration")
    print("###")
    print("### Serial sampling:   %s" % ("serial" in use))
    print("### Threaded sampling: %s" % ("threads" in use))
    print("###")
    print("#" * 60)
    print()
    sys.stdout.flush()

    # Normalize the test environment.
    env = dict(os.environ)
    env.pop("ISODOUBLE_TOLERANCE", None)
    env["PYTHONPATH"] = os.pathsep.join(
        filter(None, [root_dir, env.get("PYTHONPATH")])
    )

    total_pass, total_count = 0, 0
    if "serial" in use:
        with Stage("Serial tests"):
            total_pass += run_stage(
                "Serial",
                root_dir,
                list(options),
                dict(env, ISODOUBLE_WORKERS="1"),
                verbose,
                workers,
            )
            total_count += len(isodouble_tests)
    if "threads" in use:
        with Stage("Threaded tests"):
            total_pass += run_stage(
                "Threads",
                root_dir,
                list(options),
                dict(env, ISODOUBLE_WORKERS=str(threads)),
                verbose,
                workers,
            )
            total_count += len(isodouble_tests)
    print("    " + "~" * 54)
    print(
        "%24s: Passed %4d of %4d tests (%5.1f%%)"
        % (
            "total",
            total_pass,
            total_count,
            float(100 * total_pass) / max(total_count, 1),
        )
    )
    return not (total_count == total_pass)


class ExtendAction(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        items = getattr(namespace, self.dest, None)
        items = items[:] if items else []
        items.extend(values)
        setattr(namespace, self.dest, items)


def driver():
    parser = argparse.ArgumentParser(
        description="isodouble test suite",
        epilog="Any unrecognized arguments will be forwarded to pytest",
    )
    parser.add_argument(
        "--use",
        action=ExtendAction,
        type=lambda s: s.split(","),
        help="Comma-separated stages to run: serial, threads.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=2,
        help="Sampling threads used by the threaded stage.",
    )
    parser.add_argument(
        "-C",
        "--directory",
        dest="root_dir",
        metavar="DIR",
        action="store",
        required=False,
        help="Root directory from which to run tests.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        dest="verbose",
        action="store_true",
        help="Print more debugging information.",
    )
    parser.add_argument(
        "-j",
        type=int,
        default=None,
        dest="workers",
        help="Number of parallel workers for testing",
    )

    args, opts = parser.parse_known_args()
    for stage in args.use or ():
        if stage not in ("serial", "threads"):
            parser.error(f"unknown stage {stage!r}")

    sys.exit(run_tests(options=opts, **vars(args)))


if __name__ == "__main__":
    driver()
