"""Pauli operators in symplectic form and k = 1 stabilizer codes.

Convention: g = i^lam X^x Z^u with Y = iXZ, so every Hermitian Pauli string
written without a phase prefix parses with lam = 0 unless it contains Y.
Bit j of ``x``/``u`` is qubit j (leftmost character).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exactnum import GaussianRational

_PHASE_PREFIX = (("-i", 3), ("+i", 1), ("i", 1), ("-", 2), ("+", 0))
_PHASE_TEXT = {0: "", 1: "i", 2: "-", 3: "-i"}


def _popcount(v: int) -> int:
    return bin(v).count("1")


class PauliOp:
    __slots__ = ("n", "lam", "x", "u")

    def __init__(self, n: int, lam: int, x: int, u: int):
        self.n = n
        self.lam = lam % 4
        self.x = x
        self.u = u

    @classmethod
    def identity(cls, n: int) -> "PauliOp":
        return cls(n, 0, 0, 0)

    @classmethod
    def from_bits(cls, lam: int, xbits: Sequence[int], ubits: Sequence[int]) -> "PauliOp":
        if len(xbits) != len(ubits):
            raise ValueError("bit-vectors of different length")
        x = sum(1 << j for j, b in enumerate(xbits) if b)
        u = sum(1 << j for j, b in enumerate(ubits) if b)
        return cls(len(xbits), lam, x, u)

    @property
    def xbits(self) -> tuple:
        return tuple((self.x >> j) & 1 for j in range(self.n))

    @property
    def ubits(self) -> tuple:
        return tuple((self.u >> j) & 1 for j in range(self.n))

    def key(self):
        return (self.n, self.lam, self.x, self.u)

    def __eq__(self, other):
        if isinstance(other, PauliOp):
            return self.key() == other.key()
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"PauliOp({pauli_format(self)!r})"

    def __str__(self):
        return pauli_format(self)

    def __mul__(self, other: "PauliOp") -> "PauliOp":
        return pauli_mul(self, other)

    @property
    def weight(self) -> int:
        return _popcount(self.x | self.u)

    def is_hermitian(self) -> bool:
        return (self.lam - _popcount(self.x & self.u)) % 2 == 0

    def is_x_type(self) -> bool:
        return self.u == 0

    def is_z_type(self) -> bool:
        return self.x == 0

    def phase(self) -> GaussianRational:
        return (GaussianRational(1), GaussianRational(0, 1),
                GaussianRational(-1), GaussianRational(0, -1))[self.lam]


def pauli_parse(text: str) -> PauliOp:
    s = text.strip()
    lam = 0
    for prefix, val in _PHASE_PREFIX:
        if s.startswith(prefix):
            lam = val
            s = s[len(prefix):]
            break
    x = u = 0
    for j, ch in enumerate(s):
        if ch in "I.":
            continue
        if ch == "X":
            x |= 1 << j
        elif ch == "Z":
            u |= 1 << j
        elif ch == "Y":
            x |= 1 << j
            u |= 1 << j
            lam += 1
        else:
            raise ValueError(f"invalid Pauli character {ch!r} in {text!r}")
    if not s:
        raise ValueError(f"empty Pauli string {text!r}")
    return PauliOp(len(s), lam, x, u)


def pauli_format(g: PauliOp, dot: bool = False) -> str:
    lam = g.lam
    chars = []
    for j in range(g.n):
        xb, ub = (g.x >> j) & 1, (g.u >> j) & 1
        if xb and ub:
            chars.append("Y")
            lam -= 1
        elif xb:
            chars.append("X")
        elif ub:
            chars.append("Z")
        else:
            chars.append("." if dot else "I")
    return _PHASE_TEXT[lam % 4] + "".join(chars)


def _check_size(g: PauliOp, h: PauliOp):
    if g.n != h.n:
        raise ValueError(f"size mismatch: {g.n} vs {h.n} qubits")


def pauli_mul(g: PauliOp, h: PauliOp) -> PauliOp:
    _check_size(g, h)
    lam = g.lam + h.lam + 2 * _popcount(g.u & h.x)
    return PauliOp(g.n, lam, g.x ^ h.x, g.u ^ h.u)


def pauli_inverse(g: PauliOp) -> PauliOp:
    return PauliOp(g.n, -g.lam + 2 * _popcount(g.x & g.u), g.x, g.u)


def symplectic(g: PauliOp, h: PauliOp) -> int:
    _check_size(g, h)
    return (_popcount(g.x & h.u) + _popcount(g.u & h.x)) % 2


def commutes(g: PauliOp, h: PauliOp) -> bool:
    return symplectic(g, h) == 0


def weight(g: PauliOp) -> int:
    return g.weight


# -- F2 linear algebra on symplectic vectors ---------------------------------


def _vec(g: PauliOp) -> int:
    return g.x | (g.u << g.n)


def f2_rank(vectors: Sequence[int]) -> int:
    basis = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def f2_nullspace(rows: Sequence[int]):
    """Basis of {c : XOR of rows[k] over bits k of c is 0}, as bitmasks."""
    basis = {}  # pivot bit -> (vector, combination)
    out = []
    for k, v in enumerate(rows):
        c = 1 << k
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = (v, c)
                break
            bv, bc = basis[top]
            v ^= bv
            c ^= bc
        if not v:
            out.append(c)
    return out


def gray_order(m: int):
    """(index, flipped bit) pairs of the reflected Gray code, starting at 0."""
    yield 0, None
    prev = 0
    for k in range(1, 1 << m):
        g = k ^ (k >> 1)
        bit = (g ^ prev).bit_length() - 1
        prev = g
        yield g, bit


def product(ops: Sequence[PauliOp], n: int) -> PauliOp:
    acc = PauliOp.identity(n)
    for g in ops:
        acc = pauli_mul(acc, g)
    return acc


def enumerate_group(gens: Sequence[PauliOp], n: int | None = None, max_gens: int = 20):
    """All 2^m products of commuting independent generators, in Gray order."""
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("qubit count needed for an empty generator list")
        n = gens[0].n
    m = len(gens)
    if m > max_gens:
        raise ValueError(f"{m} generators exceeds the enumeration limit {max_gens}")
    for g in gens:
        if g.n != n:
            raise ValueError("generators on different qubit counts")
    if f2_rank([_vec(g) for g in gens]) != m:
        raise ValueError("dependent generators")
    inverses = [pauli_inverse(g) for g in gens]
    out = []
    acc = PauliOp.identity(n)
    for index, bit in gray_order(m):
        if bit is not None:
            acc = pauli_mul(acc, gens[bit] if (index >> bit) & 1 else inverses[bit])
        out.append(acc)
    return out


@dataclass(frozen=True)
class WeightEnumerator:
    n: int
    counts: tuple  # counts[w] = number of operators of weight w

    def coeff(self, w: int) -> int:
        return self.counts[w] if 0 <= w <= self.n else 0

    def total(self) -> int:
        return sum(self.counts)

    def __str__(self):
        return format_enumerator(self)


def weight_enumerator(ops: Sequence[PauliOp], n: int | None = None) -> WeightEnumerator:
    ops = list(ops)
    if n is None:
        if not ops:
            raise ValueError("qubit count needed for an empty operator list")
        n = ops[0].n
    counts = [0] * (n + 1)
    for g in ops:
        if g.n != n:
            raise ValueError("operators on different qubit counts")
        counts[g.weight] += 1
    return WeightEnumerator(n, tuple(counts))


def format_enumerator(we: WeightEnumerator, x="x", y="y") -> str:
    terms = []
    for w in range(we.n + 1):
        c = we.counts[w]
        if not c:
            continue
        mono = []
        if we.n - w:
            mono.append(x if we.n - w == 1 else f"{x}^{we.n - w}")
        if w:
            mono.append(y if w == 1 else f"{y}^{w}")
        body = "*".join(mono) or "1"
        terms.append(body if c == 1 else f"{c}*{body}")
    return " + ".join(terms) if terms else "0"


# -- codes -------------------------------------------------------------------


class InvalidCode(ValueError):
    pass


@dataclass(frozen=True)
class StabCode:
    n: int
    generators: tuple
    logical_x: PauliOp
    logical_z: PauliOp
    distance: int | None = field(default=None, compare=False)

    @property
    def m(self) -> int:
        return len(self.generators)

    @property
    def k(self) -> int:
        return self.n - self.m

    def validate(self) -> "StabCode":
        """Raise InvalidCode unless this is a valid [[n, 1]] stabilizer code."""
        ops = list(self.generators) + [self.logical_x, self.logical_z]
        for g in ops:
            if g.n != self.n:
                raise InvalidCode(f"{pauli_format(g)} acts on {g.n} qubits, code has {self.n}")
            if not g.is_hermitian():
                raise InvalidCode(f"{pauli_format(g)} is not Hermitian")
        if self.k != 1:
            raise InvalidCode(f"k = n - m = {self.k}, only k = 1 is supported")
        gens = self.generators
        for a in range(len(gens)):
            for b in range(a + 1, len(gens)):
                if not commutes(gens[a], gens[b]):
                    raise InvalidCode(
                        f"generators {pauli_format(gens[a])} and {pauli_format(gens[b])} anticommute"
                    )
        if f2_rank([_vec(g) for g in gens]) != len(gens):
            raise InvalidCode("generators are dependent")
        for g in enumerate_group(gens, self.n):
            if g.x == 0 and g.u == 0 and g.lam != 0:
                raise InvalidCode("-I lies in the stabilizer group")
        for name, lg in (("logical_x", self.logical_x), ("logical_z", self.logical_z)):
            for g in gens:
                if not commutes(lg, g):
                    raise InvalidCode(f"{name} anticommutes with {pauli_format(g)}")
        if commutes(self.logical_x, self.logical_z):
            raise InvalidCode("logical_x and logical_z commute")
        return self

    def group(self):
        return enumerate_group(self.generators, self.n)


def make_code(stabilizers: Sequence[str], logical_x: str, logical_z: str,
              distance: int | None = None) -> StabCode:
    gens = tuple(pauli_parse(s) for s in stabilizers)
    lx, lz = pauli_parse(logical_x), pauli_parse(logical_z)
    return StabCode(lx.n, gens, lx, lz, distance).validate()


def parse_code(text: str) -> StabCode:
    """Parse the sectioned code file format (see codes/*.code)."""
    sections = {"stabilizers": [], "logical_x": [], "logical_z": [], "distance": []}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            end = line.find("]")
            if end < 0:
                raise ValueError(f"line {lineno}: unterminated section header")
            name = line[1:end].strip().lower()
            if name not in sections:
                raise ValueError(f"line {lineno}: unknown section [{name}]")
            current = name
            rest = line[end + 1:].strip()
            if rest:
                sections[current].append((lineno, rest))
            continue
        if current is None:
            raise ValueError(f"line {lineno}: content before any section")
        sections[current].append((lineno, line))
    ops = {}
    for name in ("stabilizers", "logical_x", "logical_z"):
        parsed = []
        for lineno, s in sections[name]:
            try:
                parsed.append(pauli_parse(s))
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
        ops[name] = parsed
    for name in ("logical_x", "logical_z"):
        if len(ops[name]) != 1:
            raise ValueError(f"section [{name}] needs exactly one operator")
    distance = None
    if sections["distance"]:
        if len(sections["distance"]) != 1:
            raise ValueError("section [distance] needs exactly one integer")
        lineno, s = sections["distance"][0]
        try:
            distance = int(s)
        except ValueError:
            raise ValueError(f"line {lineno}: bad distance {s!r}") from None
        if distance < 1:
            raise ValueError(f"line {lineno}: distance must be positive")
    lx, lz = ops["logical_x"][0], ops["logical_z"][0]
    n = lx.n
    for g in ops["stabilizers"] + [lz]:
        if g.n != n:
            raise ValueError(f"operator {pauli_format(g)} has {g.n} qubits, expected {n}")
    return StabCode(n, tuple(ops["stabilizers"]), lx, lz, distance)


def format_code(code: StabCode, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines.append("[stabilizers]")
    lines += [pauli_format(g, dot=True) for g in code.generators]
    lines.append("[logical_x]")
    lines.append(pauli_format(code.logical_x, dot=True))
    lines.append("[logical_z]")
    lines.append(pauli_format(code.logical_z, dot=True))
    if code.distance is not None:
        lines.append(f"[distance] {code.distance}")
    return "\n".join(lines) + "\n"


def css_split(code: StabCode):
    """(S_X, S_Z) generator lists if the stabilizer group is CSS, else None.

    X-type elements are the products c.gens with c in the nullspace of the
    Z-parts; likewise for Z-type.  The group is CSS iff the two subgroups
    together have rank m.
    """
    gens = code.generators
    n = code.n

    def pure(part):
        rows = [part(g) for g in gens]
        out = []
        for c in f2_nullspace(rows):
            out.append(product([g for k, g in enumerate(gens) if (c >> k) & 1], n))
        return out

    sx = pure(lambda g: g.u)
    sz = pure(lambda g: g.x)
    if len(sx) + len(sz) != len(gens):
        return None
    return sx, sz


def is_css(code: StabCode) -> bool:
    return css_split(code) is not None


def _h_conjugate(g: PauliOp) -> PauliOp:
    # H X H = Z, H Z H = X, H Y H = -Y
    return PauliOp(g.n, g.lam + 2 * _popcount(g.x & g.u), g.u, g.x)


def dual_code(code: StabCode) -> StabCode:
    """Conjugate by H on every qubit; logical roles swap."""
    return StabCode(
        code.n,
        tuple(_h_conjugate(g) for g in code.generators),
        _h_conjugate(code.logical_z),
        _h_conjugate(code.logical_x),
        code.distance,
    )


def _lift(g: PauliOp, inner: StabCode) -> PauliOp:
    """Replace each single-qubit factor of g by the inner code's logical on
    the corresponding block."""
    n_in = inner.n
    acc = PauliOp(g.n * n_in, g.lam, 0, 0)
    for j in range(g.n):
        xb, ub = (g.x >> j) & 1, (g.u >> j) & 1
        shift = j * n_in
        if xb:
            lx = inner.logical_x
            acc = pauli_mul(acc, PauliOp(acc.n, lx.lam, lx.x << shift, lx.u << shift))
        if ub:
            lz = inner.logical_z
            acc = pauli_mul(acc, PauliOp(acc.n, lz.lam, lz.x << shift, lz.u << shift))
    return acc


def concat(outer: StabCode, inner: StabCode) -> StabCode:
    """Concatenated code: ``outer.n`` blocks of ``inner``, with the outer
    generators and logicals written in terms of the inner logicals.

    Its decoder is outer_decoder o inner_decoder.
    """
    if outer.k != 1 or inner.k != 1:
        raise InvalidCode("concatenation needs k = 1 codes")
    n = outer.n * inner.n
    gens = []
    for b in range(outer.n):
        shift = b * inner.n
        for g in inner.generators:
            gens.append(PauliOp(n, g.lam, g.x << shift, g.u << shift))
    gens += [_lift(g, inner) for g in outer.generators]
    return StabCode(
        n,
        tuple(gens),
        _lift(outer.logical_x, inner),
        _lift(outer.logical_z, inner),
    )


def trivial_code() -> StabCode:
    """The 1-qubit code with no stabilizers."""
    return StabCode(1, (), pauli_parse("X"), pauli_parse("Z"), 1)
