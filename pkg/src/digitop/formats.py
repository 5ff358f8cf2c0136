"""Line-oriented text formats for images, maps, multiplications, H-spaces, groups and certificates.

Every file is a sequence of records ``keyword int int ...``; ``#`` starts a
comment.  Headers (``image``, ``map``, ``mul``, ``group``, ``step``) open a
block and the lines after them fill it in:

    image 5            edge 0 1
    map 6 6            f 5 4
    mul 5              m 1 2 3        (mu(1, 2) = 3)
    group 4            g 1 3 0
    subset 1 2
    base 0
    cat 1
    certificate 1 2    base 0 0       step 0 ... (a map block)

A map file carries its domain image block first and, when it differs, its
codomain image block second.  An H-space file is an image block, ``base``,
``cat`` and a ``mul`` block; a magma file omits ``base``.
"""

from dataclasses import dataclass, field

from .errors import DigitopError, ParseError
from .homotopy import HomotopyCertificate
from .image import make_image
from .maps import DigitalMap

ARITY = {
    "image": 1,
    "edge": 2,
    "map": 2,
    "f": 2,
    "mul": 1,
    "m": 3,
    "group": 1,
    "g": 3,
    "subset": None,
    "base": None,
    "cat": 1,
    "certificate": 2,
    "step": 1,
}


@dataclass
class _Block:
    kind: str
    header: tuple
    line: int
    rows: list = field(default_factory=list)


@dataclass
class Document:
    path: str
    blocks: list
    scalars: dict

    def of(self, kind):
        return [b for b in self.blocks if b.kind == kind]

    def fail(self, message, line=None):
        raise ParseError(message, self.path, line)


OWNER = {"edge": "image", "f": "map", "m": "mul", "g": "group"}


def tokenize(text, path="<input>"):
    """Parse into blocks and scalar records; checks keywords, arity and integer syntax."""
    blocks = []
    scalars = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        key, args = line[0], line[1:]
        if key not in ARITY:
            raise ParseError(f"unknown keyword {key!r}", path, lineno)
        want = ARITY[key]
        if want is not None and len(args) != want:
            raise ParseError(f"{key} takes {want} integer(s), got {len(args)}", path, lineno)
        try:
            nums = tuple(int(a, 10) for a in args)
        except ValueError:
            raise ParseError(f"non-integer argument in {' '.join(line)!r}", path, lineno) from None
        if any(v < 0 for v in nums):
            raise ParseError("negative index", path, lineno)
        if key in OWNER:
            if not blocks or blocks[-1].kind != OWNER[key]:
                raise ParseError(f"{key} line outside a {OWNER[key]} block", path, lineno)
            blocks[-1].rows.append((lineno, nums))
        elif key in ("image", "map", "mul", "group", "step"):
            blocks.append(_Block(key, nums, lineno))
        else:
            if key in scalars:
                raise ParseError(f"duplicate {key} line", path, lineno)
            scalars[key] = (lineno, nums)
    return Document(path, blocks, scalars)


# --------------------------------------------------------------------------
# builders


def _build_image(doc, block):
    (n,) = block.header
    if n < 1:
        doc.fail("image needs at least one vertex", block.line)
    for lineno, (a, b) in block.rows:
        if a >= n or b >= n:
            doc.fail(f"edge ({a}, {b}) out of range for {n} vertices", lineno)
    return make_image(n, [r for _, r in block.rows])


def _build_table(doc, block, n, width, what):
    """Fill an ``n x n`` table from ``(a, b, c)`` rows; every cell exactly once."""
    if block.header[0] != n:
        doc.fail(f"{what} size {block.header[0]} does not match {n} vertices", block.line)
    table = [[None] * n for _ in range(n)]
    for lineno, (a, b, c) in block.rows:
        if a >= n or b >= n or c >= width:
            doc.fail(f"{what} entry ({a}, {b}) -> {c} out of range", lineno)
        if table[a][b] is not None:
            doc.fail(f"{what} entry ({a}, {b}) given twice", lineno)
        table[a][b] = c
    missing = [(a, b) for a in range(n) for b in range(n) if table[a][b] is None]
    if missing:
        doc.fail(f"{what} is missing {len(missing)} entries, first {missing[0]}", block.line)
    return tuple(tuple(row) for row in table)


def _build_map(doc, block, dom, cod):
    nd, nc = block.header
    if nd != dom.n or nc != cod.n:
        doc.fail(f"map {nd}->{nc} does not fit images of sizes {dom.n}, {cod.n}", block.line)
    values = [None] * nd
    for lineno, (x, y) in block.rows:
        if x >= nd or y >= nc:
            doc.fail(f"map entry {x} -> {y} out of range", lineno)
        if values[x] is not None:
            doc.fail(f"map value for {x} given twice", lineno)
        values[x] = y
    if None in values:
        doc.fail(f"map leaves vertex {values.index(None)} unassigned", block.line)
    return DigitalMap(dom, cod, values)


def _scalar(doc, key, required=True):
    if key not in doc.scalars:
        if required:
            doc.fail(f"missing {key} line")
        return None
    return doc.scalars[key]


def _only(doc, kind):
    found = doc.of(kind)
    if len(found) != 1:
        doc.fail(f"expected exactly one {kind} block, found {len(found)}")
    return found[0]


def _images(doc):
    return [_build_image(doc, b) for b in doc.of("image")]


def _category(doc):
    lineno, (cat,) = _scalar(doc, "cat")
    if cat not in (1, 2):
        doc.fail("cat must be 1 or 2", lineno)
    return cat


def _parse(text, path, build):
    doc = tokenize(text, path)
    try:
        return build(doc)
    except ParseError:
        raise
    except DigitopError as exc:
        raise ParseError(str(exc), path) from exc


def parse_image(text, path="<input>"):
    return _parse(text, path, lambda doc: _build_image(doc, _only(doc, "image")))


def parse_map(text, path="<input>", domain=None, codomain=None):
    """A map file; images embedded in the file win over ``domain``/``codomain``."""

    def build(doc):
        imgs = _images(doc)
        if len(imgs) > 2:
            doc.fail("a map file holds at most two images")
        dom = imgs[0] if imgs else domain
        cod = imgs[1] if len(imgs) == 2 else (imgs[0] if imgs else codomain)
        if dom is None or cod is None:
            doc.fail("map file has no image block and none was supplied")
        return _build_map(doc, _only(doc, "map"), dom, cod)

    return _parse(text, path, build)


def parse_multiplication(text, n, path="<input>"):
    return _parse(text, path, lambda doc: _build_table(doc, _only(doc, "mul"), n, n, "multiplication"))


def parse_hspace(text, path="<input>"):
    from .hspace import HSpaceStructure

    def build(doc):
        img = _build_image(doc, _only(doc, "image"))
        lineno, args = _scalar(doc, "base")
        if len(args) != 1 or args[0] >= img.n:
            doc.fail("base needs one vertex of the image", lineno)
        cat = _category(doc)
        mu = _build_table(doc, _only(doc, "mul"), img.n, img.n, "multiplication")
        return HSpaceStructure(img, args[0], mu, cat)

    return _parse(text, path, build)


def parse_magma(text, path="<input>"):
    from .hspace import MagmaStructure

    def build(doc):
        img = _build_image(doc, _only(doc, "image"))
        cat = _category(doc)
        tau = _build_table(doc, _only(doc, "mul"), img.n, img.n, "multiplication")
        return MagmaStructure(img, tau, cat)

    return _parse(text, path, build)


def parse_group(text, path="<input>"):
    """Returns ``(group, subset)``; ``subset`` is None without a ``subset`` line."""
    from .group import make_group

    def build(doc):
        block = _only(doc, "group")
        n = block.header[0]
        if n < 1:
            doc.fail("group order must be positive", block.line)
        table = _build_table(doc, block, n, n, "group table")
        subset = None
        if "subset" in doc.scalars:
            lineno, args = doc.scalars["subset"]
            if any(s >= n for s in args):
                doc.fail("subset element out of range", lineno)
            subset = frozenset(args)
        return make_group(table), subset

    return _parse(text, path, build)


def parse_certificate(text, domain, codomain, path="<input>"):
    def build(doc):
        lineno, (cat, m) = _scalar(doc, "certificate")
        base = None
        if "base" in doc.scalars:
            bl, args = doc.scalars["base"]
            if len(args) != 2:
                doc.fail("certificate base takes a domain and a codomain vertex", bl)
            base = args
        steps = doc.of("step")
        maps = doc.of("map")
        if len(steps) != m + 1 or len(maps) != m + 1:
            doc.fail(f"certificate announces {m} steps but has {len(steps)} step and {len(maps)} map blocks", lineno)
        for k, s in enumerate(steps):
            if s.header[0] != k:
                doc.fail(f"expected step {k}", s.line)
        chain = tuple(_build_map(doc, b, domain, codomain) for b in maps)
        return HomotopyCertificate(chain, cat, base)

    return _parse(text, path, build)


def read(path, parser, **kw):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read: {exc.strerror}", path) from exc
    return parser(text, path=path, **kw)


# --------------------------------------------------------------------------
# writers


def dump_image(img):
    lines = [f"image {img.n}"]
    lines += [f"edge {a} {b}" for a, b in img.edges]
    return "\n".join(lines) + "\n"


def _map_block(f):
    lines = [f"map {f.domain.n} {f.codomain.n}"]
    lines += [f"f {x} {y}" for x, y in enumerate(f.values)]
    return "\n".join(lines) + "\n"


def dump_map(f, images=True):
    if not images:
        return _map_block(f)
    head = dump_image(f.domain)
    if f.codomain != f.domain:
        head += dump_image(f.codomain)
    return head + _map_block(f)


def dump_multiplication(mu):
    n = len(mu)
    lines = [f"mul {n}"]
    lines += [f"m {a} {b} {mu[a][b]}" for a in range(n) for b in range(n)]
    return "\n".join(lines) + "\n"


def dump_hspace(H):
    return dump_image(H.image) + f"base {H.basepoint}\ncat {H.category}\n" + dump_multiplication(H.mu)


def dump_magma(M):
    return dump_image(M.image) + f"cat {M.category}\n" + dump_multiplication(M.tau)


def dump_group(G, subset=None):
    lines = [f"group {G.n}"]
    lines += [f"g {a} {b} {G.mul[a][b]}" for a in range(G.n) for b in range(G.n)]
    if subset is not None:
        lines.append("subset" + "".join(f" {s}" for s in sorted(subset)))
    return "\n".join(lines) + "\n"


def dump_certificate(cert):
    out = [f"certificate {cert.category} {cert.steps}"]
    if cert.basepoint is not None:
        out.append(f"base {cert.basepoint[0]} {cert.basepoint[1]}")
    text = "\n".join(out) + "\n"
    for k, f in enumerate(cert.chain):
        text += f"step {k}\n" + _map_block(f)
    return text


def to_dot(img, name="X"):
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(img.n)]
    lines += [f"  {a} -- {b};" for a, b in img.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def records(blocks):
    """``key=value`` lines, one blank line between blocks; values are single-line strings."""
    out = []
    for block in blocks:
        for key, value in block.items():
            text = " ".join(str(v) for v in value) if isinstance(value, (list, tuple)) else str(value)
            out.append(f"{key}={text}")
        out.append("")
    return "\n".join(out)


__all__ = [
    "Document",
    "dump_certificate",
    "dump_group",
    "dump_hspace",
    "dump_image",
    "dump_magma",
    "dump_map",
    "dump_multiplication",
    "parse_certificate",
    "parse_group",
    "parse_hspace",
    "parse_image",
    "parse_magma",
    "parse_map",
    "parse_multiplication",
    "read",
    "records",
    "to_dot",
    "tokenize",
]
