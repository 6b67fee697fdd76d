"""
hypercubix.cli.transforms
=========================

Coercion of command-line and file values into the types the library expects,
and the deterministic rendering of results as CSV or JSON documents.

Every document has the same two parts: `meta`, an ordered mapping describing
how it was produced, and `data`, an ordered list of records. In CSV the meta
block is a run of "# key=value" lines ahead of the column header; in JSON it
is the "meta" member of the top-level object. Reals are rendered with repr(),
the shortest string that round-trips, and infinities as the token "inf".

Legal
-----

This file is part of hypercubix.
hypercubix is free software; you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as published
by the Free Software Foundation; either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU Lesser General Public License for more details.

You should have received a copy of the GNU General Public License and
GNU Lesser General Public License along with this program. If not, see
<http://www.gnu.org/licenses/>.
"""
import collections
import csv
import json
import math

import numpy as np

FORMAT_CSV = 'csv'
FORMAT_JSON = 'json'
FORMATS = (FORMAT_CSV, FORMAT_JSON)

INFINITY_TOKEN = 'inf'
_META_PREFIX = '# '

Document = collections.namedtuple('Document', ('meta', 'fields', 'data')) #meta: OrderedDict; fields: column names; data: list of OrderedDicts


#Functions
###############################################################################
def to_float(dictionary, keys, preprocess=(lambda x:x)):
    """
    Converts the values of `keys` in `dictionary` to floats in place, raising
    `UsageError` naming the first key that cannot be converted.
    """
    for key in keys:
        try:
            dictionary[key] = float(preprocess(dictionary.get(key)))
        except Exception:
            raise UsageError("Expected a real value for '%(key)s'; received %(value)r" % {
             'key': key,
             'value': dictionary.get(key),
            }, {key: dictionary.get(key)})

def to_int(dictionary, keys, preprocess=(lambda x:x)):
    """
    Converts the values of `keys` in `dictionary` to ints in place, raising
    `UsageError` naming the first key that cannot be converted.
    """
    for key in keys:
        try:
            dictionary[key] = int(preprocess(dictionary.get(key)))
        except Exception:
            raise UsageError("Expected an integer value for '%(key)s'; received %(value)r" % {
             'key': key,
             'value': dictionary.get(key),
            }, {key: dictionary.get(key)})

def parse_range(text):
    """
    Parses "lo:hi" into a pair of finite floats with lo < hi.
    """
    pieces = text.split(':')
    if len(pieces) != 2:
        raise UsageError("A range must be given as lo:hi; received %(text)r" % {
         'text': text,
        }, {'range': text})
    bounds = {'lo': pieces[0], 'hi': pieces[1]}
    to_float(bounds, ('lo', 'hi'))
    (lo, hi) = (bounds['lo'], bounds['hi'])
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise UsageError("A range needs finite bounds with lo < hi; received %(text)r" % {
         'text': text,
        }, {'range': text})
    return (lo, hi)

def parse_list(text, permitted):
    """
    Splits a comma-separated list, preserving order and dropping repeats, and
    checks every entry against `permitted`.
    """
    entries = []
    for entry in (e.strip() for e in text.split(',')):
        if not entry:
            continue
        if entry not in permitted:
            raise UsageError("Unknown entry %(entry)r; expected some of %(permitted)s" % {
             'entry': entry,
             'permitted': ', '.join(permitted),
            }, {'entry': entry})
        if entry not in entries:
            entries.append(entry)
    if not entries:
        raise UsageError("At least one entry is required from %(permitted)s" % {
         'permitted': ', '.join(permitted),
        })
    return tuple(entries)

def lattice_axis(lo, hi, steps):
    """
    `steps` >= 2 evenly spaced values from `lo` to `hi` inclusive, computed as
    lo + (hi - lo) * i / (steps - 1) so that symmetric ranges hit 0 exactly.
    """
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]

def render_number(value):
    """
    The shortest round-trip text for a real, or "inf"/"-inf"/"nan".
    """
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    value = float(value)
    if math.isinf(value):
        return INFINITY_TOKEN if value > 0 else '-' + INFINITY_TOKEN
    return repr(value)

def _json_value(value):
    """
    Makes `value` JSON-safe: numpy scalars become Python ones and non-finite
    reals become strings.
    """
    if isinstance(value, dict):
        return collections.OrderedDict((k, _json_value(v)) for (k, v) in value.items())
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_json_value(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isfinite(value):
            return value
        return render_number(value)
    return value

def _flatten(meta, prefix=''):
    """
    Yields (key, value) pairs of a meta mapping, nested mappings under
    dotted keys.
    """
    for (key, value) in meta.items():
        if isinstance(value, dict):
            for item in _flatten(value, prefix + key + '.'):
                yield item
        else:
            yield (prefix + key, value)

def write_document(stream, document, format):
    """
    Writes `document` to the text `stream` as CSV or JSON; the output depends
    only on the document's contents.
    """
    if format == FORMAT_JSON:
        json.dump(collections.OrderedDict((
         ('meta', _json_value(document.meta)),
         ('data', _json_value(document.data)),
        )), stream, indent=1, allow_nan=False)
        stream.write('\n')
    elif format == FORMAT_CSV:
        for (key, value) in _flatten(document.meta):
            if isinstance(value, (list, tuple)):
                value = ','.join(render_number(v) if not isinstance(v, str) else v for v in value)
            elif not isinstance(value, str):
                value = render_number(value)
            stream.write('%(prefix)s%(key)s=%(value)s\n' % {
             'prefix': _META_PREFIX,
             'key': key,
             'value': value,
            })
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(document.fields)
        for record in document.data:
            writer.writerow([
             record[field] if isinstance(record[field], str) else render_number(record[field])
             for field in document.fields
            ])
    else:
        raise UsageError("Unsupported output format %(format)r" % {
         'format': format,
        })

def read_document(stream):
    """
    Reads a document written by `write_document()`, detecting the format from
    its first non-blank character. Values come back as strings or JSON scalars;
    callers coerce them with `to_float()` and `to_int()`.
    """
    text = stream.read()
    if text.lstrip().startswith('{'):
        try:
            parsed = json.loads(text, object_pairs_hook=collections.OrderedDict)
            meta = parsed['meta']
            data = parsed['data']
        except (ValueError, KeyError, TypeError) as e:
            raise UsageError("Malformed JSON document: %(error)s" % {
             'error': str(e),
            })
        fields = list(data[0].keys()) if data else []
        return Document(meta, fields, data)

    meta = collections.OrderedDict()
    lines = text.splitlines()
    body = 0
    for line in lines:
        if not line.startswith(_META_PREFIX.strip()):
            break
        (key, _, value) = line[len(_META_PREFIX):].partition('=')
        meta[key.strip()] = value.strip()
        body += 1
    rows = list(csv.reader(lines[body:]))
    if not rows:
        raise UsageError("The CSV document has no column header")
    fields = rows[0]
    data = [collections.OrderedDict(zip(fields, row)) for row in rows[1:] if row]
    return Document(meta, fields, data)


#Exceptions
###############################################################################
class CLIException(Exception):
    """
    The base exception from which all command-line failures inherit.
    """
    items = None #Diagnostic values describing the failure, as a dictionary.

    def __init__(self, message, items=None):
        Exception.__init__(self, message)
        self.items = items if items else {}

class UsageError(CLIException, ValueError):
    """
    Indicates that arguments or an input file were invalid; exit status 2.
    """
