"""
hypercubix.model.khintchine
===========================

Sampling from the hypercubically-contoured family through its Khintchine
representation,

    X_i = Y U_i,  Y ~ chi_3,  U_i ~ Uniform[-1, 1] independently,

together with the goodness-of-fit statistics that tie samples back to the
closed forms in `hypercubix.model.density`.

Rows are produced in fixed blocks of `ROWS_PER_BLOCK`; block b draws from its
own Philox stream, keyed by `SeedSequence(seed, spawn_key=(b,))`, so blocks may
be generated concurrently and a batch of n rows is always a prefix of a larger
batch with the same seed and dimension.

Uniforms are formed from the top 52 bits of each raw 64-bit output as
(k + 1/2) 2^-52, which lies strictly inside (0, 1); normals are obtained by
inverting Phi. Any change to this recipe must change `GENERATOR_ID`.

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
import concurrent.futures
import math

import numpy as np
from scipy import stats

from hypercubix.numerics import std_normal_quantile
from hypercubix.numerics.numerics_core import emit_debug
from hypercubix.model.model_core import (
 require_dimension,
 InvalidArgument,
)

GENERATOR_ID = 'numpy-philox4x64-seedseq-block4096-raw52-ndtri-v1'
ROWS_PER_BLOCK = 4096
RADIUS_COLUMNS = 3 #Normals whose Euclidean norm gives one chi_3 draw

_SEED_LIMIT = 1 << 64
_MANTISSA_SHIFT = np.uint64(12)
_MANTISSA_SCALE = 2.0 ** -52

_KS_COEFFICIENTS = {
 0.10: 1.22,
 0.05: 1.36,
 0.01: 1.63,
} #Asymptotic Kolmogorov-Smirnov critical coefficients by significance level

SampleBatch = collections.namedtuple('SampleBatch', (
 'data', 'n', 'p', 'seed', 'generator_id',
)) #An n-by-p sample with the provenance needed to regenerate it


#Functions
###############################################################################
def _require_seed(seed):
    if isinstance(seed, bool) or int(seed) != seed or not 0 <= seed < _SEED_LIMIT:
        raise InvalidArgument("Seed must be an unsigned 64-bit integer; received %(seed)r" % {
         'seed': seed,
        }, {'seed': seed})
    return int(seed)

def _require_count(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidArgument("Sample size must be a positive integer; received %(n)r" % {
         'n': n,
        }, {'n': n})
    return int(n)

def block_generator(seed, block):
    """
    The Philox bit-generator that produces rows of block `block` for `seed`.
    """
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(block,))
    return np.random.Philox(sequence)

def open_uniforms(rng, shape):
    """
    Draws uniforms strictly inside (0, 1) from `rng`, a numpy `Generator` or
    bit-generator, consuming one raw 64-bit output per value in row-major
    order.
    """
    bit_generator = getattr(rng, 'bit_generator', rng)
    count = int(np.prod(shape))
    raw = bit_generator.random_raw(count) >> _MANTISSA_SHIFT
    return ((raw + 0.5) * _MANTISSA_SCALE).reshape(shape)

def _radii(uniforms):
    normals = std_normal_quantile(uniforms)
    return np.sqrt(np.sum(normals * normals, axis=-1))

def sample_chi3(rng, size=None):
    """
    Draws Y = |(Z1, Z2, Z3)|_2 for independent standard normals, a float if
    `size` is None or an array of `size` draws otherwise. Always positive.
    """
    if size is None:
        return float(_radii(open_uniforms(rng, (RADIUS_COLUMNS,))))
    return _radii(open_uniforms(rng, (size, RADIUS_COLUMNS)))

def _block_layout(n):
    return [
     (block, block * ROWS_PER_BLOCK, min(n, (block + 1) * ROWS_PER_BLOCK))
     for block in range((n + ROWS_PER_BLOCK - 1) // ROWS_PER_BLOCK)
    ]

def _draw_block(p, seed, block, rows):
    """
    Produces (radii, rows-by-p sample) for one block.
    """
    uniforms = open_uniforms(block_generator(seed, block), (rows, RADIUS_COLUMNS + p))
    radii = _radii(uniforms[:, :RADIUS_COLUMNS])
    signs = 2.0 * uniforms[:, RADIUS_COLUMNS:] - 1.0
    return (radii, radii[:, np.newaxis] * signs)

def _generate(p, n, seed, workers, logger):
    layout = _block_layout(n)
    emit_debug(logger, "Sampling %(n)i rows in dimension %(p)i across %(blocks)i blocks (seed=%(seed)i)", {
     'n': n,
     'p': p,
     'blocks': len(layout),
     'seed': seed,
    })
    if workers > 1 and len(layout) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_draw_block, p, seed, block, stop - start) for (block, start, stop) in layout]
            blocks = [future.result() for future in futures]
    else:
        blocks = [_draw_block(p, seed, block, stop - start) for (block, start, stop) in layout]
    radii = np.concatenate([b[0] for b in blocks])
    data = np.concatenate([b[1] for b in blocks], axis=0)
    return (radii, data)

def sample_joint(p, n, seed, workers=1, logger=None):
    """
    Draws `n` rows in dimension `p`, each a shared chi_3 radius times `p`
    independent Uniform[-1, 1] values, returning a `SampleBatch`. Every column
    is standard normal.

    The output depends only on (`p`, `n`, `seed`); `workers` > 1 generates
    blocks on a thread-pool and assembles them in order.
    """
    p = require_dimension(p)
    n = _require_count(n)
    seed = _require_seed(seed)
    (_, data) = _generate(p, n, seed, max(1, int(workers)), logger)
    return SampleBatch(data, n, p, seed, GENERATOR_ID)

def sample_radii(p, n, seed):
    """
    Regenerates the per-row radii Y behind `sample_joint(p, n, seed)`.
    """
    p = require_dimension(p)
    n = _require_count(n)
    seed = _require_seed(seed)
    return _generate(p, n, seed, 1, None)[0]

def empirical_maxnorm_cdf(batch, a):
    """
    The fraction of rows in `batch` whose max-norm is at most `a`.
    """
    a = float(a)
    if math.isnan(a) or a < 0.0:
        raise InvalidArgument("The max-norm bound must be non-negative; received %(a)r" % {
         'a': a,
        }, {'a': a})
    norms = np.max(np.abs(batch.data), axis=1)
    return int(np.count_nonzero(norms <= a)) / batch.n

def ks_statistic(column):
    """
    The Kolmogorov-Smirnov distance between the empirical distribution of
    `column` and the standard normal.
    """
    column = np.asarray(column, dtype=float).ravel()
    if column.size == 0:
        raise InvalidArgument("The Kolmogorov-Smirnov statistic needs at least one value")
    return float(stats.kstest(column, 'norm').statistic)

def ks_critical_value(n, alpha=0.01):
    """
    The asymptotic critical value c(alpha) / sqrt(n) of the one-sample
    Kolmogorov-Smirnov statistic, for alpha in 0.10, 0.05 and 0.01.
    """
    n = _require_count(n)
    if alpha not in _KS_COEFFICIENTS:
        raise InvalidArgument("No critical coefficient tabulated for alpha=%(alpha)r" % {
         'alpha': alpha,
        }, {'alpha': alpha})
    return _KS_COEFFICIENTS[alpha] / math.sqrt(n)
