import argparse
import os
import time
from abc import ABC, abstractmethod
from typing import Optional

import psutil
from loguru import logger
from pydantic import ValidationError

from core.errors import CscError
from core.serialization import (
    dump_finding,
    dump_point_set,
    dump_region,
    dump_report,
    dump_statistics,
    load_point_set,
    load_region,
    write_text,
)
from core.svg import SvgScene
from enums.algorithm import Algorithm
from enums.exit_code import ExitCode
from enums.verdict import Verdict
from src.admissible import build_admissible_region, is_admissible_center
from src.constructions import NineGonSpec, build_nine_gon, verify_nine_gon
from src.decision import all_k_subsets_csc, is_csc_position, support_certificate
from src.geometry import Point, in_strict_convex_position, reflect_set
from src.search import SearchConfig, run_search, shrink_finding


class CommandRunner(ABC):
    """
    Runs one sub-command with timing, resource logging and the exit-code
    contract.

    Subclasses implement `execute`, print their results to stdout and return
    an ExitCode. Any CscError escaping `execute` is logged and turned into its
    own exit code, so a NO verdict (exit 0) is never confused with a failed
    run.

    Attributes:
        args (argparse.Namespace): Parsed command-line arguments.
        start_time (Optional[float]): Epoch time at which `run` started.
    """

    name: str = "command"

    def __init__(self, args: argparse.Namespace) -> None:
        self.args: argparse.Namespace = args
        self.start_time: Optional[float] = None

    def _get_execution_time(self) -> str:
        """
        Computes the execution duration since the command's start time.

        Returns:
            str: Execution time formatted as 'DD:HH:MM:SS'.
        """
        if self.start_time is None:
            return "Execution time not available"

        elapsed_seconds = int(time.time() - self.start_time)

        days, remainder = divmod(elapsed_seconds, 86400)
        hours, remainder = divmod(remainder, 3600)
        minutes, seconds = divmod(remainder, 60)

        return f"{days:02}:{hours:02}:{minutes:02}:{seconds:02}"

    def _get_resource_usage(self) -> str:
        """
        Retrieves the resource usage of this process and the system RAM load.

        Returns:
            str: Formatted string with CPU time, resident memory and RAM usage.
        """
        process = psutil.Process(os.getpid())
        cpu_times = process.cpu_times()
        rss_mb = process.memory_info().rss / (1024 * 1024)
        ram_percent = psutil.virtual_memory().percent

        return (
            f"CPU time: user {cpu_times.user:.1f}s, system {cpu_times.system:.1f}s, "
            f"Process RSS: {rss_mb:.1f} MB, System RAM Usage: {ram_percent}%"
        )

    @abstractmethod
    def execute(self) -> ExitCode:
        """Runs the command body and returns its exit code."""

    def run(self) -> int:
        """
        Executes the command and logs how it went.

        Returns:
            int: The process exit code.
        """
        self.start_time = time.time()
        logger.info(f"Command '{self.name}' started.")
        try:
            code = self.execute()
        except CscError as e:
            logger.error(f"Command '{self.name}' failed: {e}")
            return int(e.exit_code)

        logger.info(f"Command '{self.name}' completed with exit code {int(code)}.")
        logger.info(f"Execution time: {self._get_execution_time()}")
        logger.info(f"Resource usage at end of execution: {self._get_resource_usage()}")
        return int(code)


class CheckRunner(CommandRunner):
    """Prints the verdict of a point-set file, or of all its k-subsets."""

    name = "check"

    def execute(self) -> ExitCode:
        points = load_point_set(self.args.file)
        algorithm = Algorithm(self.args.algorithm)

        if self.args.subsets is not None:
            k = self.args.subsets
            if not 3 <= k <= len(points):
                logger.error(f"--subsets must be between 3 and {len(points)}, got {k}")
                return ExitCode.USAGE_ERROR
            report = all_k_subsets_csc(points, k, algorithm)
            if report.all_csc:
                print(f"all {report.total} subsets YES")
            else:
                print(f"subset {report.failing_subset.describe()} {report.failing_verdict}")
            return ExitCode.SUCCESS

        verdict = is_csc_position(points, algorithm)
        print(verdict)
        if self.args.certificate and verdict.status is Verdict.YES:
            for line in support_certificate(points, verdict.witness):
                print(f"support {line.label} {line.point}: {line.halfplane}")
        return ExitCode.SUCCESS


class NineGonRunner(CommandRunner):
    """Writes the nine-gon and optionally prints its verification report."""

    name = "ninegon"

    def execute(self) -> ExitCode:
        spec = NineGonSpec(scale=self.args.scale, digits=self.args.digits)
        points = build_nine_gon(spec)

        if self.args.out:
            write_text(self.args.out, dump_point_set(points))
        elif not self.args.verify:
            print(dump_point_set(points))

        if not self.args.verify:
            return ExitCode.SUCCESS
        report = verify_nine_gon(points)
        print(dump_report(report))
        if not report.passed:
            logger.warning("Nine-gon verification failed")
            return ExitCode.VERIFICATION_FAILED
        return ExitCode.SUCCESS


class RegionRunner(CommandRunner):
    """Writes the admissible-center region of a point-set file."""

    name = "region"

    def execute(self) -> ExitCode:
        points = load_point_set(self.args.file)
        algorithm = Algorithm(self.args.algorithm)
        result = build_admissible_region(points, algorithm)
        text = dump_region(result.region, str(algorithm), result.triangles)
        if self.args.out:
            write_text(self.args.out, text)
        else:
            print(text)
        return ExitCode.SUCCESS


class PlotRunner(CommandRunner):
    """Renders a point set, its hull, a region and a center as SVG."""

    name = "plot"

    def execute(self) -> ExitCode:
        points = load_point_set(self.args.file)
        scene = SvgScene()

        if self.args.region:
            region = load_region(self.args.region)
        elif in_strict_convex_position(points) and len(points) >= 3:
            region = build_admissible_region(points, Algorithm(self.args.algorithm)).region
        else:
            region = None
            logger.info("Set is not strictly convex; no region drawn")
        if region is not None:
            scene.add_region(region)
            scene.set_witness(region.witness())

        scene.add_hull(points)
        scene.add_points(points)

        if self.args.center is not None:
            center = Point(*self.args.center)
            reflected = reflect_set(points, center)
            scene.add_hull(list(points) + list(reflected), css="reflected-hull")
            scene.add_points(reflected, css="reflected")
            scene.set_witness(center)

        if self.args.out:
            scene.save(self.args.out)
        else:
            print(scene.render())
        return ExitCode.SUCCESS


class OracleRunner(CommandRunner):
    """Prints whether a given center is admissible for a point-set file."""

    name = "oracle"

    def execute(self) -> ExitCode:
        points = load_point_set(self.args.file)
        center = Point(*self.args.center)
        print("true" if is_admissible_center(points, center) else "false")
        return ExitCode.SUCCESS


class SearchRunner(CommandRunner):
    """Runs the counterexample search and streams findings as JSON lines."""

    name = "search"

    def execute(self) -> ExitCode:
        try:
            cfg = SearchConfig(
                n=self.args.size,
                trials=self.args.trials,
                seed=self.args.seed,
                generator=self.args.generator,
                magnitude=self.args.magnitude,
                parallelism=self.args.jobs,
            )
        except ValidationError as e:
            logger.error(f"Invalid search configuration: {e}")
            return ExitCode.USAGE_ERROR

        result = run_search(cfg)
        for finding in result.findings:
            if self.args.shrink:
                finding = shrink_finding(finding)
            print(dump_finding(finding))
        print(dump_statistics(result.statistics))
        return ExitCode.SUCCESS
