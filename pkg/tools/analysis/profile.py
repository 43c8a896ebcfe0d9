#!/usr/bin/env python

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import argparse
import json
import os
import subprocess
import sys
import time

import psutil

SCRIPT_DIR = os.path.dirname(os.path.realpath(__file__))
REPO_ROOT = os.path.realpath(os.path.join(SCRIPT_DIR, "..", ".."))
TESTS_DIR = os.path.join(REPO_ROOT, "tools", "tests")
sys.path.insert(0, REPO_ROOT)

from bvquery.utils import blue, green, red, yellow

MB = 1024 * 1024
RANGES = {
    "colors": (blue, green, yellow, red),
    "utilization": (8, 20, 50),
    "cpu_time": (0.4, 1, 10),
    "memory": (32 * MB, 64 * MB, 256 * MB),
    "duration": (0.8, 1, 3),
}


def theory(name):
    return os.path.join(TESTS_DIR, name)


'''Named bvquery invocations, profiled one process each.'''
WORKLOADS = {
    "models-unary": ["models", "--theory", theory("unary.fol")],
    "models-functions": ["models", "--theory", theory("functions.fol")],
    "space-graphs": ["space", "--theory", theory("graphs.fol"),
                     "--max-size", "3", "--K", "12"],
    "eval-unary": ["eval", "--theory", theory("unary.fol"),
                   "--formula", "ex x (x != x1 & r(x))", "--xi", "0"],
    "atoms-unary-2": ["atoms", "--theory", theory("unary.fol"),
                      "--arity", "2"],
    "synthesize-unary": ["synthesize", "--theory", theory("unary.fol"),
                         "--formula", "ex x (x != y & r(x))"],
    "synthesize-unary-2": ["synthesize", "--theory", theory("unary.fol"),
                           "--formula", "r(y1) & y1 != y2"],
    "conservativity": ["conservativity", "--theory", theory("unary.fol"),
                       "--sentences", theory("battery.txt")],
}


def get_stats(p, interval=1):
    """Run psutil and downselect the information."""
    utilization = p.cpu_percent(interval=interval)
    return {
        "utilization": utilization,
        "cpu_times": p.cpu_times(),
        "memory": p.memory_info(),
    }


def profile_cmd(cmd, timeout=0):
    start_time = time.time()
    proc = subprocess.Popen(cmd, stdout=subprocess.PIPE,
                            stderr=subprocess.PIPE)
    p = psutil.Process(pid=proc.pid)

    delay = 0
    step = 0.2
    percents = []
    stats = {}
    while p.is_running() and p.status() != psutil.STATUS_ZOMBIE:
        try:
            current_stats = get_stats(p, step)
            if current_stats["memory"].rss == 0:
                break
            stats = current_stats
            percents.append(stats["utilization"])
        except (psutil.AccessDenied, psutil.NoSuchProcess,
                psutil.ZombieProcess):
            break
        delay += step
        if timeout > 0 and delay >= timeout:
            proc.kill()
            break
    proc.communicate()
    duration = time.time() - start_time

    utilization = [percent for percent in percents if percent != 0]
    avg_utilization = 0
    if utilization:
        avg_utilization = sum(utilization) / len(utilization)

    if not stats:
        # The process finished before the first sample.
        return {"duration": duration, "exit": proc.returncode}
    return {
        "utilization": avg_utilization,
        "duration": duration,
        "memory": stats["memory"].rss,
        "cpu_time": stats["cpu_times"].user + stats["cpu_times"].system,
        "exit": proc.returncode,
    }


def summary_line(name, result):
    if not args.n:
        for key, v in sorted(result.items()):
            print("%s" % (
                RANGES["colors"][v[0]]("%s:%s" % (key[0].upper(), v[0]))),
                end="")
        print(" ", end="")
    print("%s:" % name, end=" ")
    for key, v in sorted(result.items()):
        print("%s: %s" % (key, v[1]), end=" ")
    print("")


def summary(results, display=False):
    """Map the results to simple thresholds."""
    def rank(value, ranges):
        for i, r in enumerate(ranges):
            if value < r:
                return i
        return len(ranges)

    summary_results = {}
    for name, result in sorted(results.items()):
        failed = result.get("exit", 0) != 0
        summary_result = {}
        for key in RANGES:
            if key == "colors" or key not in result:
                continue
            if failed:
                summary_result[key] = (len(RANGES["colors"]) - 1, -1)
            else:
                summary_result[key] = (rank(result[key], RANGES[key]),
                                       result[key])
        if display and not args.check:
            summary_line(name, summary_result)
        summary_results[name] = summary_result
    return summary_results


def profile(workloads, timeout=0, rounds=1):
    report = {}
    for name, argv in sorted(workloads.items()):
        print("Profiling: bvquery %s" % " ".join(argv))
        cmd = [sys.executable, "-m", "bvquery"] + argv
        results = {}
        for i in range(rounds):
            result = profile_cmd(cmd, timeout=timeout)
            summary({"%s (%d/%d)" % (name, i + 1, rounds): result},
                    display=True)
            for k, v in result.items():
                results.setdefault(k, []).append(v)
        report[name] = dict((k, sum(v) / len(v)) for k, v in results.items())
        if rounds > 1:
            summary({"%s   avg" % name: report[name]}, display=True)
    return report


def compare(profile1, profile2):
    """Compare two JSON profile outputs."""
    for name in sorted(profile1):
        if name not in profile2:
            continue
        summary_line(name, profile1[name])
        summary_line(name, profile2[name])


def regress_check(profile1, profile2):
    regressed = False
    for name in sorted(profile1):
        if name not in profile2:
            continue
        for measure in profile1[name]:
            if measure not in profile2[name]:
                continue
            if profile2[name][measure][0] > profile1[name][measure][0]:
                print("%s %s has regressed (%s->%s)!" % (
                    name, measure, profile1[name][measure][0],
                    profile2[name][measure][0]))
                regressed = True
    if not regressed:
        print("No regressions!")
        return 0
    return 1


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=(
        "Profile bvquery commands on the bundled theories."
    ))
    parser.add_argument(
        "-n", action="store_true", default=False,
        help="Do not output colored ranks."
    )
    parser.add_argument(
        "--restrict", metavar="LIST", default="",
        help="Limit to a list of comma-separated workload names."
    )

    group = parser.add_argument_group("Run Options:")
    group.add_argument(
        "--timeout", metavar="N", default=0, type=int,
        help="Max seconds a workload may run."
    )
    group.add_argument(
        "--rounds", metavar="N", default=1, type=int,
        help="Run the profile for N rounds and use the average."
    )

    group = parser.add_argument_group("Performance Options:")
    group.add_argument(
        "--output", metavar="FILE", default=None,
        help="Write JSON performance output to file."
    )
    group.add_argument(
        "--check", metavar="OLD_OUTPUT", nargs=1,
        help="Check regressions using an existing output."
    )
    group.add_argument(
        "--compare", metavar="FILE", nargs=2,
        help="Compare existing performance outputs (old, new)."
    )
    args = parser.parse_args()

    if args.compare:
        with open(args.compare[0]) as fh:
            profile1 = json.loads(fh.read())
        with open(args.compare[1]) as fh:
            profile2 = json.loads(fh.read())
        compare(profile1, profile2)
        exit(0)

    if args.check:
        with open(args.check[0]) as fh:
            profile1 = json.loads(fh.read())

    workloads = WORKLOADS
    if args.restrict:
        names = args.restrict.split(",")
        unknown = [n for n in names if n not in WORKLOADS]
        if unknown:
            print("Unknown workloads: %s" % ", ".join(unknown))
            exit(1)
        workloads = dict((n, WORKLOADS[n]) for n in names)

    results = profile(workloads, timeout=args.timeout, rounds=args.rounds)
    if args.check:
        exit(regress_check(profile1, summary(results)))

    if args.output is not None:
        with open(args.output, "w") as fh:
            fh.write(json.dumps(summary(results), indent=1, sort_keys=True))
        print("Wrote output summary: %s" % args.output)
    sys.exit(0)
