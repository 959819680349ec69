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

import logging

import yaml

from .util import PtepError

_log = logging.getLogger(__name__)


###############################################################################
# Exceptions
###############################################################################

class ConfigurationError(PtepError, ValueError):
    pass


###############################################################################
# Settings
###############################################################################

MIN_TOLERANCE = 1e-14

STDOUT = "-"

SUBCOMMANDS = ("spectrum", "boundary", "dep", "metric", "lemma")

FORMATS = ("csv", "json", "svg")


class PtepSettings(object):
    DEFAULTS = {
        "tolerances": {
            "zero_threshold": 1e-10,
            "bisect_tol": 1e-13,
            "rank_pivot": 1e-9,
            "triple_root_tol": 1e-6
        },
        "bisection": {
            "bracket_step": 0.05,
            "max_radius": 8.0
        },
        "jobs": 1
    }

    def __init__(self, zero_threshold = None, bisect_tol = None,
                 rank_pivot = None, triple_root_tol = None,
                 bracket_step = None, max_radius = None, jobs = None):
        tols = self.DEFAULTS["tolerances"]
        self.zero_threshold = _pick(zero_threshold, tols["zero_threshold"])
        self.bisect_tol = _pick(bisect_tol, tols["bisect_tol"])
        self.rank_pivot = _pick(rank_pivot, tols["rank_pivot"])
        self.triple_root_tol = _pick(triple_root_tol,
                                     tols["triple_root_tol"])
        bisection = self.DEFAULTS["bisection"]
        self.bracket_step = _pick(bracket_step, bisection["bracket_step"])
        self.max_radius = _pick(max_radius, bisection["max_radius"])
        jobs = _pick(jobs, self.DEFAULTS["jobs"])
        try:
            self.jobs = int(jobs)
        except (TypeError, ValueError):
            raise ConfigurationError("jobs must be an integer, got {!r}"
                                     .format(jobs))
        self.validate()

    @classmethod
    def parse_from(cls, path):
        _log.debug("Loading settings from %s", path)
        with open(path, "r") as handle:
            try:
                data = yaml.safe_load(handle) or {}
            except yaml.YAMLError as err:
                raise ConfigurationError("malformed settings file {}: {}"
                                         .format(path, err))
        if not isinstance(data, dict):
            raise ConfigurationError("settings file must hold a mapping: "
                                     + str(path))
        tolerances = data.get("tolerances") or {}
        bisection = data.get("bisection") or {}
        if not isinstance(tolerances, dict) or not isinstance(bisection, dict):
            raise ConfigurationError("invalid settings layout in "
                                     + str(path))
        return cls(zero_threshold = tolerances.get("zero_threshold"),
                   bisect_tol = tolerances.get("bisect_tol"),
                   rank_pivot = tolerances.get("rank_pivot"),
                   triple_root_tol = tolerances.get("triple_root_tol"),
                   bracket_step = bisection.get("bracket_step"),
                   max_radius = bisection.get("max_radius"),
                   jobs = data.get("jobs"))

    def override(self, **kwargs):
        values = self.to_JSON_object()
        for key, value in kwargs.items():
            if key not in values:
                raise ConfigurationError("unknown setting: " + key)
            if value is not None:
                values[key] = value
        return PtepSettings(**values)

    def validate(self):
        for name in ("zero_threshold", "bisect_tol", "rank_pivot",
                     "triple_root_tol"):
            value = getattr(self, name)
            if (isinstance(value, bool) or not isinstance(value, (int, float))
                    or not value >= MIN_TOLERANCE):
                raise ConfigurationError("{} must be a number >= {}, got {!r}"
                                         .format(name, MIN_TOLERANCE, value))
        for name in ("bracket_step", "max_radius"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigurationError("{} must be a number, got {!r}"
                                         .format(name, value))
        if not self.bracket_step > 0.0:
            raise ConfigurationError("bracket_step must be positive")
        if not self.max_radius > self.bracket_step:
            raise ConfigurationError("max_radius must exceed bracket_step")
        if self.jobs < 1:
            raise ConfigurationError("jobs must be at least 1")

    def to_JSON_object(self):
        return {
            "zero_threshold": self.zero_threshold,
            "bisect_tol": self.bisect_tol,
            "rank_pivot": self.rank_pivot,
            "triple_root_tol": self.triple_root_tol,
            "bracket_step": self.bracket_step,
            "max_radius": self.max_radius,
            "jobs": self.jobs
        }


def _pick(value, default):
    return default if value is None else value


###############################################################################
# Run Configuration
###############################################################################

class Sweep(object):
    def __init__(self, variable, start, stop, count):
        self.variable = variable
        self.start = float(start)
        self.stop = float(stop)
        self.count = int(count)
        if self.count < 2:
            raise ConfigurationError("sweep count must be at least 2")

    def to_JSON_object(self):
        return {
            "variable": self.variable,
            "start": self.start,
            "stop": self.stop,
            "count": self.count
        }


class RunConfig(object):
    """Everything a runner needs: subcommand, model parameters, optional
    sweep, output target and the effective settings."""

    def __init__(self, subcommand, params = None, sweep = None,
                 output_format = "csv", output_path = STDOUT,
                 settings = None, options = None):
        if subcommand not in SUBCOMMANDS:
            raise ConfigurationError("unknown subcommand: " + repr(subcommand))
        if output_format not in FORMATS:
            raise ConfigurationError("unknown format: " + repr(output_format))
        if output_format == "svg" and subcommand != "boundary":
            raise ConfigurationError("svg output is only available for "
                                     "the boundary subcommand")
        self.subcommand = subcommand
        self.params = dict(params or {})
        self.sweep = sweep
        self.output_format = output_format
        self.output_path = output_path or STDOUT
        self.settings = settings or PtepSettings()
        self.options = dict(options or {})

    @property
    def to_stdout(self):
        return self.output_path == STDOUT

    def to_JSON_object(self):
        return {
            "subcommand": self.subcommand,
            "params": dict(self.params),
            "sweep": self.sweep.to_JSON_object() if self.sweep else None,
            "format": self.output_format,
            "output": self.output_path,
            "settings": self.settings.to_JSON_object(),
            "options": dict(self.options)
        }
