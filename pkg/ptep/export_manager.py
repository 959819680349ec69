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

from contextlib import contextmanager
import csv
import io
import json
import logging
import sys

import jsonschema
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure
from pkg_resources import resource_string

from .data import STDOUT


###############################################################################
# Utility
###############################################################################

class LoggingObject(object):
    log = logging.getLogger(__name__)


SCHEMA_RESOURCE = "records.schema.json"

SVG_LIMIT = 2.2


def load_schema():
    return json.loads(resource_string(__name__.split(".")[0],
                                      SCHEMA_RESOURCE).decode("utf-8"))


def format_value(value):
    """CSV cell text: floats with 17 significant digits."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    if isinstance(value, (list, tuple)):
        return " ".join(format_value(v) for v in value)
    return str(value)


@contextmanager
def open_target(path):
    if path == STDOUT:
        yield sys.stdout
    else:
        with io.open(path, "w", newline = "", encoding = "utf-8") as handle:
            yield handle


###############################################################################
# CSV
###############################################################################

class CsvExporter(LoggingObject):
    def export_records(self, path, fields, records):
        self.log.info("Exporting %d CSV records.", len(records))
        with open_target(path) as handle:
            self.log.debug("Writing to %s", path)
            self.write(handle, fields, records)

    def write(self, handle, fields, records):
        writer = csv.DictWriter(handle, fieldnames = list(fields),
                                lineterminator = "\n",
                                extrasaction = "ignore")
        writer.writeheader()
        for record in records:
            writer.writerow({k: format_value(record.get(k)) for k in fields})

    def dumps(self, fields, records):
        buf = io.StringIO()
        self.write(buf, fields, records)
        return buf.getvalue()


###############################################################################
# JSON
###############################################################################

class JsonExporter(LoggingObject):
    def __init__(self, schema = None):
        self.schema = schema or load_schema()

    def document(self, config, records):
        data = {
            "config": config.to_JSON_object(),
            "records": list(records)
        }
        jsonschema.validate(instance = data, schema = self.schema)
        return data

    def export_records(self, path, config, records):
        self.log.info("Exporting %d JSON records.", len(records))
        data = self.document(config, records)
        with open_target(path) as handle:
            self.log.debug("Writing to %s", path)
            json.dump(data, handle, indent = 2)
            handle.write("\n")


###############################################################################
# SVG
###############################################################################

class SvgExporter(LoggingObject):
    def render(self, polylines, title = None):
        """SVG text for a list of (xs, ys) polylines on [-2.2, 2.2]^2."""
        fig = Figure(figsize = (6, 6))
        FigureCanvasSVG(fig)
        ax = fig.add_subplot(1, 1, 1)
        for xs, ys in polylines:
            ax.plot(xs, ys, color = "black", linewidth = 1.0)
        ax.axhline(0.0, color = "gray", linewidth = 0.5)
        ax.axvline(0.0, color = "gray", linewidth = 0.5)
        ax.set_xlim(-SVG_LIMIT, SVG_LIMIT)
        ax.set_ylim(-SVG_LIMIT, SVG_LIMIT)
        ax.set_aspect("equal")
        ax.set_xticks([-2, -1, 0, 1, 2])
        ax.set_yticks([-2, -1, 0, 1, 2])
        ax.set_xlabel("a")
        ax.set_ylabel("b")
        if title:
            ax.set_title(title)
        buf = io.StringIO()
        fig.savefig(buf, format = "svg")
        return buf.getvalue()

    def export_curve(self, path, polylines, title = None):
        self.log.info("Exporting %d polylines as SVG.", len(polylines))
        text = self.render(polylines, title = title)
        with open_target(path) as handle:
            self.log.debug("Writing to %s", path)
            handle.write(text)
