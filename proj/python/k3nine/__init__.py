# Copyright 2026 The k3nine authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact computations behind the classification of order-9 non-symplectic
automorphisms of K3 surfaces: rational/cyclotomic arithmetic, the holomorphic
fixed-point constraint system, lattice invariants, the case enumeration and
the elliptic-fibration analyzer. All arithmetic is exact; report functions
return plain dicts decoded from the JSON the C++ core emits."""

import json as _json
import os as _os
from pathlib import Path as _Path

from ._core import (  # noqa: F401
    CycNum,
    QPoly,
    __version__,
    chi_fix_order3,
    coprime_refinement,
    cyclotomic_polynomial,
    eigen_ranks,
    euler_phi,
    parse_poly,
    poly_gcd,
    resultant,
    rh_options,
    squarefree_decomposition,
    zeta_pow,
)
from . import _core as _c


def data_dir():
    """Directory holding the bundled tables, or None when not packaged.
    The K3NINE_DATA environment variable overrides the packaged copy."""
    env = _os.environ.get("K3NINE_DATA")
    if env:
        return env
    p = _Path(__file__).parent / "data"
    return str(p) if p.is_dir() else None


def _need_data(data):
    d = data or data_dir()
    if d is None:
        raise FileNotFoundError(
            "no dataset directory: pass data=... or set K3NINE_DATA")
    return d


def lefschetz(order, k, isolated_only=False, enumerate_solutions=False,
              a_max=24, alpha_min=0, alpha_max=4):
    """Admissible local types and the holomorphic fixed-point system."""
    return _json.loads(_c.lefschetz_report(
        order, k, isolated_only, enumerate_solutions, a_max, alpha_min, alpha_max))


def lattice(expr):
    """Rank, signature, determinant, parity and discriminant group."""
    return _json.loads(_c.lattice_report(expr))


def fibration(a="0", b="0"):
    """Kodaira fiber census of y^2 = x^3 + a(t) x + b(t)."""
    return _json.loads(_c.fibration_report(a, b))


def bisection(f):
    """Genus of y^2 = f(t), or "splits"."""
    return _json.loads(_c.bisection_report(f))


def monomials(order, weights, degree, character=0):
    """Invariant monomials of a diagonal action, with the smoothness screen."""
    return _json.loads(_c.monomials_report(order, list(weights), character, degree))


def classify(data=None, axioms="full", case=""):
    """Enumerate fixed-locus profiles; includes the diff against the table."""
    return _json.loads(_c.classify_report(_need_data(data), axioms, case))


def explain(row_id, data=None, axioms="full"):
    """Derivation trace for one classification row."""
    return _c.explain_report(_need_data(data), axioms, row_id)


def verify(data=None):
    """Run every bundled verification check; returns the summary dict."""
    return _json.loads(_c.verify_report(_need_data(data)))
