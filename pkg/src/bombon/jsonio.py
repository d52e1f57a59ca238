"""JSON encoding shared by the CLI and the report writers.

Conventions: a complex scalar is the pair [re, im] (bare numbers are
accepted on input and read as real); a homogeneous vector is an array
of complex scalars; a matrix is a row-major array of rows.  Decoders
raise ValueError on malformed input so callers can map every parse
problem to one exit code.
"""

import json

import numpy as np

from .convexity import AffineComplexLine, ball_body, ellipsoid_body, polydisk_body
from .projective import ProjLine, ProjPoint, Subspace
from .quadrics import QuadricBombon


def canonical_dumps(obj):
    """Deterministic JSON text: fixed separators, no NaN, keys as built."""
    return json.dumps(obj, indent=2, separators=(",", ": "), allow_nan=False)


def encode_complex(z):
    z = complex(z)
    return [float(z.real), float(z.imag)]


def decode_complex(obj):
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        return complex(obj)
    if (isinstance(obj, (list, tuple)) and len(obj) == 2
            and all(isinstance(t, (int, float)) and not isinstance(t, bool)
                    for t in obj)):
        return complex(obj[0], obj[1])
    raise ValueError(f"not a complex scalar: {obj!r}")


def encode_vector(v):
    return [encode_complex(z) for z in np.asarray(v, dtype=complex)]


def decode_vector(obj, expect_len=None):
    if not isinstance(obj, list) or not obj:
        raise ValueError("a vector is a nonempty array of complex scalars")
    v = np.array([decode_complex(t) for t in obj], dtype=complex)
    if expect_len is not None and v.size != expect_len:
        raise ValueError(f"vector has length {v.size}, expected {expect_len}")
    return v


def encode_matrix(m):
    a = np.asarray(m, dtype=complex)
    return [[encode_complex(z) for z in row] for row in a]


def decode_matrix(obj, square=False):
    if not isinstance(obj, list) or not obj:
        raise ValueError("a matrix is a nonempty array of rows")
    rows = [decode_vector(r) for r in obj]
    width = rows[0].size
    if any(r.size != width for r in rows):
        raise ValueError("matrix rows have unequal lengths")
    m = np.stack(rows)
    if square and m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix is {m.shape[0]}x{m.shape[1]}, not square")
    return m


def encode_quadric(x):
    return {"n": x.n, "A": encode_matrix(x.a)}


def decode_quadric(obj, tol=None):
    if not isinstance(obj, dict) or "A" not in obj:
        raise ValueError('a quadric is {"n": int, "A": matrix}')
    a = decode_matrix(obj["A"], square=True)
    n = obj.get("n", a.shape[0] - 1)
    if a.shape[0] != int(n) + 1:
        raise ValueError(f'matrix size {a.shape[0]} does not match "n": {n}')
    kwargs = {} if tol is None else {"tol": tol}
    return QuadricBombon(a, **kwargs)


def encode_point(p):
    v = p.v if isinstance(p, ProjPoint) else p
    return encode_vector(v)


def decode_point(obj, expect_len=None):
    return ProjPoint(decode_vector(obj, expect_len))


def encode_line(line):
    return {"a": encode_vector(line.a), "b": encode_vector(line.b)}


def decode_line(obj, expect_len=None):
    if not isinstance(obj, dict) or "a" not in obj or "b" not in obj:
        raise ValueError('a line is {"a": hvector, "b": hvector}')
    a = decode_vector(obj["a"], expect_len)
    b = decode_vector(obj["b"], a.size)
    return ProjLine(a, b)


def encode_subspace(s):
    if s.basis.shape[1] == 0:
        return {"ambient_dim": s.ambient_dim, "basis": []}
    return {"ambient_dim": s.ambient_dim,
            "basis": encode_matrix(s.basis.T)}


def decode_subspace(obj, expect_ambient=None):
    if not isinstance(obj, dict) or "basis" not in obj:
        raise ValueError('a subspace is {"basis": [spanning vectors]}')
    rows = obj["basis"]
    if not isinstance(rows, list):
        raise ValueError("subspace basis must be an array of vectors")
    if not rows:
        amb = obj.get("ambient_dim", expect_ambient)
        if amb is None:
            raise ValueError("empty subspace needs an ambient_dim")
        return Subspace.empty(int(amb))
    m = decode_matrix(rows)
    if expect_ambient is not None and m.shape[1] != expect_ambient + 1:
        raise ValueError(f"subspace vectors have length {m.shape[1]}, "
                         f"expected {expect_ambient + 1}")
    return Subspace(m.T)


def encode_section(sec, rep=None):
    out = {"tag": sec.tag.value, "low_confidence": bool(sec.low_confidence)}
    if sec.point is not None:
        out["point"] = encode_point(sec.point)
    if sec.circle is not None:
        out["circle"] = {"a": encode_vector(sec.circle.a),
                         "b": encode_vector(sec.circle.b),
                         "c": encode_complex(sec.circle.c)}
    if rep is not None:
        out["sides"] = {
            "inner": [s.value for s in rep.inner],
            "outer": [s.value for s in rep.outer],
            "separates": bool(rep.separates),
        }
    return out


def encode_moebius(f):
    return {"m": encode_matrix(f.m)}


def encode_gencircle(c):
    return {"m": encode_matrix(c.m)}


def decode_affine_line(obj):
    if not isinstance(obj, dict) or "base" not in obj or "direction" not in obj:
        raise ValueError('an affine line is {"base": vector, '
                         '"direction": vector}')
    base = decode_vector(obj["base"])
    direction = decode_vector(obj["direction"], base.size)
    return AffineComplexLine(base, direction)


def decode_body(obj):
    """Body spec: {"type": "ball"|"ellipsoid"|"bidisk", parameters}."""
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValueError('a body spec is {"type": ..., parameters}')
    kind = obj["type"]
    if kind == "ball":
        n = int(obj.get("n", 2))
        radius = float(obj.get("radius", 1.0))
        center = (decode_vector(obj["center"], n) if "center" in obj
                  else np.zeros(n, dtype=complex))
        return ball_body(n, radius=radius, center=center)
    if kind == "ellipsoid":
        if "H" not in obj:
            raise ValueError('an ellipsoid spec needs "H" (Hermitian matrix)')
        h = decode_matrix(obj["H"], square=True)
        center = (decode_vector(obj["center"], h.shape[0])
                  if "center" in obj else np.zeros(h.shape[0], dtype=complex))
        return ellipsoid_body(center, h)
    if kind == "bidisk":
        radii = obj.get("radii", [1.0, 1.0])
        if not isinstance(radii, list) or not radii:
            raise ValueError("bidisk radii must be a nonempty array")
        return polydisk_body([float(r) for r in radii])
    raise ValueError(f"unknown body type: {kind!r}")


def load_input(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
