#Copyright (c) 2026 ptep contributors
#
#Permission is hereby granted, free of charge, to any person obtaining a copy
#of this software and associated documentation files (the "Software"), to deal
#in the Software without restriction, including without limitation the rights
#to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
#copies of the Software, and to permit persons to whom the Software is
#furnished to do so, subject to the following conditions:

#The above copyright notice and this permission notice shall be included in
#all copies or substantial portions of the Software.

#THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
#OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
#THE SOFTWARE.

###############################################################################
# Imports
###############################################################################

from argparse import ArgumentParser, ArgumentTypeError
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
import logging
import sys

from .boundary import (
    BoundaryCurve, bisection_curve, closed_loop, dep_points,
    analytic_ep_coupling, lemma_eta, parametric_curve
)
from .data import (
    ConfigurationError, MIN_TOLERANCE, PtepSettings, RunConfig, STDOUT, Sweep
)
from .export_manager import CsvExporter, JsonExporter, SvgExporter
from .matmodel import ModelParams
from .metric import metric_report
from .spectrum import classify
from .util import PtepError, cwd, grid


###############################################################################
# Argument Types
###############################################################################

def tolerance(text):
    try:
        value = float(text)
    except ValueError:
        raise ArgumentTypeError("not a number: " + repr(text))
    if not value >= MIN_TOLERANCE:
        raise ArgumentTypeError("tolerance must be at least {}"
                                .format(MIN_TOLERANCE))
    return value


def resolution(text):
    try:
        value = int(text)
    except ValueError:
        raise ArgumentTypeError("not an integer: " + repr(text))
    if value < 8:
        raise ArgumentTypeError("resolution must be at least 8")
    return value


def count(text):
    try:
        value = int(text)
    except ValueError:
        raise ArgumentTypeError("not an integer: " + repr(text))
    if value < 2:
        raise ArgumentTypeError("grid count must be at least 2")
    return value


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise ArgumentTypeError("not an integer: " + repr(text))
    if value < 1:
        raise ArgumentTypeError("must be at least 1")
    return value


###############################################################################
# Launcher
###############################################################################

class PtepLauncher(object):
    """Parses the command line, sets up logging and settings, and hands
        the run over to the runner of the selected subcommand.
    """

    def __init__(self, run_from_source = False):
        self.log = logging.getLogger()
        self.run_from_source = run_from_source
        self.parser = None

    def launch(self, argv = None):
        args = self.parse_arguments(argv)
        if args.debug:
            logging.basicConfig(filename = args.log_file, filemode = "w",
                                level = logging.DEBUG)
        else:
            logging.basicConfig(level = logging.WARNING)
        if self.run_from_source:
            self.log.debug("Running from the source tree.")
        try:
            settings = self._load_settings(args)
            config = self._run_config(args, settings)
        except ConfigurationError as err:
            self.parser.error(str(err))
        with cwd(args.cwd):
            try:
                self.log.info("Executing command %s.", args.subcommand)
                args.runner(config, log = self.log).run()
                return True
            except PtepError as err:
                self.log.error(str(err))
                sys.stderr.write("[ptep] {}\n".format(err))
                return False

    def parse_arguments(self, argv = None):
        parser = ArgumentParser(prog = "ptep",
                description = "Spectra, exceptional points and metrics of "
                              "small PT-symmetric matrix models.")
        parser.add_argument("--config",
                            help = "YAML settings file overriding defaults")
        parser.add_argument("--debug", action = "store_true",
                            help = "set debug logging")
        parser.add_argument("--log-file",
                            help = "write debug log to this file")
        parser.add_argument("-c", "--cwd",
                            help = "change current directory before running")
        parser.add_argument("--jobs", type = positive_int,
                            help = "worker processes for sweeps")
        subparsers = parser.add_subparsers(dest = "subcommand")
        subparsers.required = True
        self._spectrum_parser(subparsers.add_parser("spectrum"))
        self._boundary_parser(subparsers.add_parser("boundary"))
        self._dep_parser(subparsers.add_parser("dep"))
        self._metric_parser(subparsers.add_parser("metric"))
        self._lemma_parser(subparsers.add_parser("lemma"))
        self.parser = parser
        args = parser.parse_args(argv)
        if args.format == "svg" and args.subcommand != "boundary":
            parser.error("svg output is only available for boundary")
        if (args.subcommand == "boundary" and args.method == "parametric"
                and args.c != 0.0):
            parser.error("the parametric boundary exists only at c = 0")
        return args

    def _spectrum_parser(self, parser):
        parser.add_argument("--dim", type = int, choices = (2, 3),
                            default = 3, help = "model dimension")
        self._model_args(parser)
        parser.add_argument("--sweep", nargs = 4,
                            metavar = ("VAR", "START", "STOP", "COUNT"),
                            help = "sweep a, b or c over a closed grid")
        parser.add_argument("--zero-threshold", type = tolerance,
                            help = "relative discriminant zero band")
        parser.add_argument("--rank-pivot", type = tolerance,
                            help = "relative pivot cutoff for ranks")
        parser.add_argument("--triple-root-tol", type = tolerance,
                            help = "relative triple-root detection band")
        self._output_args(parser, ("csv", "json"))
        parser.set_defaults(runner = SpectrumRunner)

    def _boundary_parser(self, parser):
        parser.add_argument("--method", choices = ("parametric", "bisect"),
                            default = "parametric")
        parser.add_argument("--resolution", type = resolution,
                            default = 360)
        parser.add_argument("--c", type = float, default = 0.0,
                            help = "shift of the observer level")
        parser.add_argument("--tol", type = tolerance,
                            help = "bisection bracket width")
        self._output_args(parser, ("csv", "json", "svg"))
        parser.set_defaults(runner = BoundaryRunner)

    def _dep_parser(self, parser):
        parser.add_argument("--c", type = float, default = 0.0,
                            help = "shift of the observer level")
        self._output_args(parser, ("csv", "json"))
        parser.set_defaults(runner = DepRunner)

    def _metric_parser(self, parser):
        parser.add_argument("--a", type = float, default = 0.0)
        parser.add_argument("--gamma", type = float, default = 0.0)
        parser.add_argument("--a-grid", nargs = 3, type = float,
                            metavar = ("START", "STOP", "COUNT"))
        parser.add_argument("--gamma-grid", nargs = 3, type = float,
                            metavar = ("START", "STOP", "COUNT"))
        parser.add_argument("--scale", type = float, default = 1.0,
                            help = "overall factor of the metric")
        self._output_args(parser, ("csv", "json"))
        parser.set_defaults(runner = MetricRunner)

    def _lemma_parser(self, parser):
        parser.add_argument("--b-grid", nargs = 3, type = float,
                            metavar = ("START", "STOP", "COUNT"),
                            default = [0.01, 0.1, 10])
        parser.add_argument("--tol", type = tolerance,
                            help = "bisection bracket width")
        self._output_args(parser, ("csv", "json"))
        parser.set_defaults(runner = LemmaRunner)

    def _model_args(self, parser):
        parser.add_argument("--a", type = float, default = 0.0)
        parser.add_argument("--b", type = float, default = 0.0)
        parser.add_argument("--c", type = float, default = 0.0)

    def _output_args(self, parser, formats):
        parser.add_argument("--format", choices = formats, default = "csv")
        parser.add_argument("-o", "--output", default = STDOUT,
                            help = "output file (default: standard output)")

    def _load_settings(self, args):
        if args.config:
            try:
                settings = PtepSettings.parse_from(args.config)
            except (IOError, OSError) as err:
                raise ConfigurationError("cannot read settings: "
                                         + str(err))
        else:
            settings = PtepSettings()
        return settings.override(
            zero_threshold = getattr(args, "zero_threshold", None),
            rank_pivot = getattr(args, "rank_pivot", None),
            triple_root_tol = getattr(args, "triple_root_tol", None),
            bisect_tol = getattr(args, "tol", None),
            jobs = args.jobs)

    def _run_config(self, args, settings):
        params = {}
        options = {}
        sweep = None
        if args.subcommand == "spectrum":
            params = {"dimension": args.dim, "a": args.a, "b": args.b,
                      "c": args.c}
            if args.sweep:
                variable, start, stop, n = args.sweep
                if variable not in ("a", "b", "c"):
                    raise ConfigurationError("sweep variable must be a, b "
                                             "or c")
                try:
                    sweep = Sweep(variable, float(start), float(stop), int(n))
                except ValueError as err:
                    raise ConfigurationError("invalid sweep: " + str(err))
        elif args.subcommand == "boundary":
            params = {"c": args.c}
            options = {"method": args.method,
                       "resolution": args.resolution}
        elif args.subcommand == "dep":
            params = {"c": args.c}
        elif args.subcommand == "metric":
            options = {
                "a": _grid_option(args.a_grid, args.a),
                "gamma": _grid_option(args.gamma_grid, args.gamma),
                "scale": args.scale
            }
        elif args.subcommand == "lemma":
            options = {"b": _grid_option(args.b_grid, None)}
        return RunConfig(args.subcommand, params = params, sweep = sweep,
                         output_format = args.format,
                         output_path = args.output, settings = settings,
                         options = options)


def _grid_option(bounds, single):
    if bounds is None:
        return [float(single)]
    start, stop, n = bounds
    if n != int(n) or n < 2:
        raise ConfigurationError("grid count must be an integer >= 2")
    return grid(start, stop, int(n))


###############################################################################
# Runners
###############################################################################

@contextmanager
def ordered_map(jobs):
    """A map function that keeps input order, parallel when jobs > 1."""
    if jobs <= 1:
        yield map
    else:
        with ProcessPoolExecutor(max_workers = jobs) as executor:
            yield executor.map


class PtepRunner(object):
    """Base class of the runners behind each subcommand."""

    FIELDS = ()

    def __init__(self, config, log = None):
        self.config = config
        self.settings = config.settings
        self.log = log or logging.getLogger()

    def run(self):
        records = self.records()
        self.log.info("%s produced %d records.", type(self).__name__,
                      len(records))
        self.emit(records)
        return True

    def records(self):
        return []

    def emit(self, records):
        if self.config.output_format == "json":
            JsonExporter().export_records(self.config.output_path,
                                          self.config, records)
        else:
            CsvExporter().export_records(self.config.output_path,
                                         self.FIELDS, records)


class SpectrumPoint(object):
    # picklable worker for process pools
    def __init__(self, settings):
        self.threshold = settings.zero_threshold
        self.triple_tol = settings.triple_root_tol
        self.rank_pivot = settings.rank_pivot

    def __call__(self, params):
        result = classify(params, threshold = self.threshold,
                          triple_tol = self.triple_tol,
                          rank_pivot = self.rank_pivot)
        roots = result.roots.real_values()
        roots.extend([None] * (params.dimension - len(roots)))
        pair = result.roots.complex_pair or (None, None)
        record = {
            "dimension": params.dimension,
            "a": params.a,
            "b": params.b,
            "c": params.c,
            "class": result.cls,
            "complex_re": pair[0],
            "complex_im": pair[1],
            "jordan_defect": result.jordan_defect,
            "discriminant": result.roots.discriminant
        }
        for i in range(3):
            record["root_" + str(i)] = roots[i] if i < len(roots) else None
        return record


class SpectrumRunner(PtepRunner):
    FIELDS = ("dimension", "a", "b", "c", "class", "root_0", "root_1",
              "root_2", "complex_re", "complex_im", "jordan_defect",
              "discriminant")

    def points(self):
        params = self.config.params
        base = ModelParams(params["dimension"], params["a"], params["b"],
                           params["c"])
        sweep = self.config.sweep
        if sweep is None:
            return [base]
        values = grid(sweep.start, sweep.stop, sweep.count)
        return [base.replace(**{sweep.variable: v}) for v in values]

    def records(self):
        points = self.points()
        for params in points:
            params.validate()
        with ordered_map(self.settings.jobs) as mapper:
            return list(mapper(SpectrumPoint(self.settings), points))


class BoundaryRunner(PtepRunner):
    FIELDS = ("method", "beta_or_theta", "a", "b", "z", "y")

    def curve_points(self):
        options = self.config.options
        n = options["resolution"]
        if options["method"] == "parametric":
            return BoundaryCurve.PARAMETRIC, closed_loop(parametric_curve(n))
        s = self.settings
        with ordered_map(s.jobs) as mapper:
            curve = bisection_curve(n, c = self.config.params["c"],
                                    tol = s.bisect_tol,
                                    step = s.bracket_step,
                                    max_radius = s.max_radius,
                                    mapper = mapper)
        return BoundaryCurve.BISECTION, curve.points

    def run(self):
        method, points = self.curve_points()
        self.log.info("Boundary with %d points (%s).", len(points), method)
        if self.config.output_format == "svg":
            xs = [p.a for p in points] + [points[0].a]
            ys = [p.b for p in points] + [points[0].b]
            title = "{} boundary, c = {}".format(method.lower(),
                                                 self.config.params["c"])
            SvgExporter().export_curve(self.config.output_path, [(xs, ys)],
                                       title = title)
        else:
            self.emit([self._record(method, p) for p in points])
        return True

    def _record(self, method, point):
        coordinate = point.beta if point.beta is not None else point.theta
        return {
            "method": method.lower(),
            "beta_or_theta": coordinate,
            "a": point.a,
            "b": point.b,
            "z": point.double_root_z,
            "y": point.single_root_y
        }


class DepRunner(PtepRunner):
    FIELDS = ("a", "b", "c", "z")

    def records(self):
        points = dep_points(self.config.params["c"])
        return [p.to_JSON_object() for p in points]


class MetricRunner(PtepRunner):
    FIELDS = ("a", "gamma", "scale", "alpha", "xi", "theta_00", "theta_01",
              "theta_10", "theta_11", "determinant", "min_eigenvalue",
              "positive", "residual")

    def records(self):
        options = self.config.options
        records = []
        for a in options["a"]:
            for gamma in options["gamma"]:
                candidate, residual, positive, smallest = metric_report(
                    a, gamma, scale = options["scale"])
                theta = candidate.theta
                records.append({
                    "a": float(a),
                    "gamma": float(gamma),
                    "scale": candidate.scale,
                    "alpha": candidate.alpha,
                    "xi": candidate.xi,
                    "theta_00": float(theta[0, 0]),
                    "theta_01": float(theta[0, 1]),
                    "theta_10": float(theta[1, 0]),
                    "theta_11": float(theta[1, 1]),
                    "determinant": candidate.determinant,
                    "min_eigenvalue": smallest,
                    "positive": positive,
                    "residual": residual
                })
        return records


class LemmaRunner(PtepRunner):
    FIELDS = ("b", "eta", "eta_over_b2", "analytic_eta")

    def records(self):
        records = []
        for b in self.config.options["b"]:
            eta = lemma_eta(b, tol = self.settings.bisect_tol)
            records.append({
                "b": b,
                "eta": eta,
                "eta_over_b2": eta / (b * b),
                "analytic_eta": analytic_ep_coupling(b) - 1.0
            })
        return records


###############################################################################
# Entry Point
###############################################################################

def main(argv = None, source_runner = False):
    launcher = PtepLauncher(run_from_source = source_runner)
    try:
        if launcher.launch(argv = argv):
            return 0
        return 1
    except SystemExit as err:
        # argparse reports usage errors through SystemExit(2)
        return err.code if isinstance(err.code, int) else 2
