"""The space N = M (x) M (x) M over its 729-element standard basis.

A basis index is a triple of ordered pairs ((i1,j1),(i2,j2),(i3,j3))
with entries in {1,2,3}.  Tensors are sparse maps from indices to
Polynomial coefficients; factor matrices are 3x3 arrays of Polynomials
used to expand decomposable tensors.
"""

import json

from .poly import Polynomial, parse_polynomial

__all__ = [
    "encode_index", "decode_index", "all_indices", "index_is_even",
    "Tensor", "tensor_from_factors", "matrix", "matrix_from_dict", "pi12",
    "mat_add", "mat_scale", "mat_transpose",
]


def encode_index(alpha):
    n = 0
    for k in (2, 1, 0):
        i, j = alpha[k]
        n = n * 9 + (i - 1) * 3 + (j - 1)
    return n


def decode_index(n):
    pairs = []
    for _ in range(3):
        pairs.append((n % 9 // 3 + 1, n % 3 + 1))
        n //= 9
    return tuple(pairs)


def all_indices():
    """All 729 indices in encoded order."""
    return [decode_index(n) for n in range(729)]


def index_is_even(alpha):
    counts = [0, 0, 0]
    for i, j in alpha:
        counts[i - 1] += 1
        counts[j - 1] += 1
    return all(c % 2 == 0 for c in counts)


class Tensor:
    __slots__ = ("entries",)

    def __init__(self, entries=None):
        self.entries = {} if entries is None else entries

    @classmethod
    def basis(cls, alpha, coeff=1):
        coeff = Polynomial.coerce(coeff)
        return cls({alpha: coeff} if coeff else {})

    def __add__(self, other):
        entries = dict(self.entries)
        for a, p in other.entries.items():
            s = entries.get(a)
            s = p if s is None else s + p
            if s:
                entries[a] = s
            else:
                entries.pop(a, None)
        return Tensor(entries)

    def __neg__(self):
        return Tensor({a: -p for a, p in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Polynomial.coerce(c)
        entries = {}
        for a, p in self.entries.items():
            q = p * c
            if q:
                entries[a] = q
        return Tensor(entries)

    def coeff(self, alpha):
        return self.entries.get(alpha, Polynomial())

    def substitute(self, assignment):
        entries = {}
        for a, p in self.entries.items():
            q = p.substitute(assignment)
            if q:
                entries[a] = q
        return Tensor(entries)

    def map_vars(self, fn):
        return Tensor({a: p.map_vars(fn) for a, p in self.entries.items()})

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __len__(self):
        return len(self.entries)

    def items(self):
        return sorted(self.entries.items(), key=lambda kv: encode_index(kv[0]))

    def __str__(self):
        parts = [f"e[{_idx_str(a)}]*({p})" for a, p in self.items()]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__

    # -- JSON schema -------------------------------------------------

    def to_json(self):
        return {
            "entries": [
                {"idx": [list(pair) for pair in a], "coeff": str(p)}
                for a, p in self.items()
            ]
        }

    @classmethod
    def from_json(cls, obj):
        entries = {}
        for rec in obj["entries"]:
            alpha = tuple((int(i), int(j)) for i, j in rec["idx"])
            p = parse_polynomial(rec["coeff"])
            if p:
                entries[alpha] = p
        return cls(entries)

    def dumps(self):
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))


def _idx_str(alpha):
    return ",".join(f"{i}{j}" for i, j in alpha)


def tensor_from_factors(x, y, z):
    """Expand x (x) y (x) z into basis entries."""
    entries = {}
    for i1 in range(3):
        for j1 in range(3):
            px = x[i1][j1]
            if not px:
                continue
            for i2 in range(3):
                for j2 in range(3):
                    py = y[i2][j2]
                    if not py:
                        continue
                    pxy = px * py
                    for i3 in range(3):
                        for j3 in range(3):
                            pz = z[i3][j3]
                            if not pz:
                                continue
                            alpha = ((i1 + 1, j1 + 1), (i2 + 1, j2 + 1), (i3 + 1, j3 + 1))
                            entries[alpha] = pxy * pz
    return Tensor(entries)


def pi12(t):
    """Swap the first two tensor factors (no matrix transposition)."""
    entries = {}
    for (p1, p2, p3), c in t.entries.items():
        entries[(p2, p1, p3)] = c
    return Tensor(entries)


# -- factor matrices -------------------------------------------------

def matrix(rows):
    """3x3 factor matrix from a nested sequence of Polynomial-likes."""
    return tuple(tuple(Polynomial.coerce(x) for x in row) for row in rows)


def matrix_from_dict(d):
    """Factor matrix from a map (i,j) -> coefficient, 1-based."""
    return tuple(
        tuple(Polynomial.coerce(d.get((i, j), 0)) for j in range(1, 4))
        for i in range(1, 4)
    )


def mat_add(*mats):
    return tuple(
        tuple(sum((m[i][j] for m in mats), Polynomial()) for j in range(3))
        for i in range(3)
    )


def mat_scale(m, c):
    c = Polynomial.coerce(c)
    return tuple(tuple(m[i][j] * c for j in range(3)) for i in range(3))


def mat_transpose(m):
    return tuple(tuple(m[j][i] for j in range(3)) for i in range(3))
