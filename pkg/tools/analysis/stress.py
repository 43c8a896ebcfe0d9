#!/usr/bin/env python

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import argparse
import filecmp
import os
import shutil
import subprocess
import sys
import tempfile
import time

SCRIPT_DIR = os.path.dirname(os.path.realpath(__file__))
REPO_ROOT = os.path.realpath(os.path.join(SCRIPT_DIR, "..", ".."))
sys.path.insert(0, REPO_ROOT)

from bvquery.utils import green, red


def single(args, out):
    """Run one bvquery command writing to out; returns its duration."""
    start_time = time.time()
    cmd = [sys.executable, "-m", "bvquery"] + args + ["--out", out]
    proc = subprocess.Popen(cmd, cwd=REPO_ROOT, stderr=subprocess.PIPE,
                            stdout=subprocess.PIPE)
    if ARGS.verbose:
        print("PID: %d" % (proc.pid))
    stdout, stderr = proc.communicate()
    end_time = time.time() - start_time
    if proc.returncode not in ARGS.expect:
        if not ARGS.verbose:
            print(stdout.decode("utf-8", "replace"))
            print(stderr.decode("utf-8", "replace"))
        print("%s Command exited %d. (total %6.4fs)" % (
            red("FAILED"), proc.returncode, end_time))
        sys.exit(1)
    return end_time


def stress(args):
    """Run a command several times and require identical output files."""
    workdir = tempfile.mkdtemp()
    times = []
    try:
        first = os.path.join(workdir, "run-0")
        for i in range(args["num"]):
            out = os.path.join(workdir, "run-%d" % i)
            times.append(single(args["command"], out))
            if i > 0 and not filecmp.cmp(first, out, shallow=False):
                print("%s Output of round %d differs from round 1" % (
                    red("FAILED"), i + 1))
                return 1
            if args["stat"]:
                print("%6.4f" % (times[-1]))
            else:
                print("%s Identical output (%d/%d) rounds. "
                      "(average %6.4fs)" % (
                          green("PASSED"), i + 1, args["num"],
                          sum(times) / len(times)))
    finally:
        shutil.rmtree(workdir)
    return 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(
        description="Rerun a bvquery command and compare its outputs")
    parser.add_argument("-n", "--num", type=int, default=5,
                        help="Number of times to run the command")
    parser.add_argument("--expect", type=int, action="append",
                        default=None,
                        help="Accepted exit codes (default 0; repeatable)")
    parser.add_argument("--stat", action="store_true", default=False,
                        help="Only print numerical values")
    parser.add_argument("--verbose", action="store_true", default=False,
                        help="Do not consume stderr/stdout")
    parser.add_argument("command", nargs=argparse.REMAINDER,
                        help="bvquery arguments, e.g. synthesize --theory ...")
    ARGS = parser.parse_args()
    ARGS.expect = ARGS.expect or [0]
    if not ARGS.command:
        parser.error("a bvquery command is required")
    sys.exit(stress(vars(ARGS)))
