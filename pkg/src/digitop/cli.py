"""``digitop`` command-line front end.

Exit status: 0 YES, 1 NO, 2 INCONCLUSIVE, 64 usage error, 65 parse error.
"""

import argparse
import sys

from . import formats
from .errors import (
    CapExceeded,
    DigitopError,
    DiscontinuousMultiplication,
    ParseError,
    UnknownFixture,
    VertexOutOfRange,
)
from .group import (
    as_topological_group,
    cayley_graph,
    cayley_reconstruction_check,
    classify_np2_group_image,
    identity_neighborhood,
    is_digital_topological_group,
)
from .homotopy import (
    DEFAULT_BUDGET,
    Status,
    homotopic,
    homotopy_equivalent,
    is_contractible,
    is_irreducible,
    is_rigid,
    pointed_homotopic,
)
from .hspace import (
    FIXTURES,
    HSpaceStructure,
    MagmaStructure,
    decompose_np2,
    find_exact_inverses,
    fixture,
    h_equivalent,
    has_left_homotopy_inverse,
    has_right_homotopy_inverse,
    is_associative,
    is_homotopy_associative,
    left_unital_reduction,
    magma_point_extension,
    reduce_to_irreducible,
    search_hspace_multiplications,
    transport_structure,
)
from .image import DigitalImage, enumerate_images
from .maps import DigitalMap, continuity_violation

EXIT = {Status.YES: 0, Status.NO: 1, Status.INCONCLUSIVE: 2}
USAGE = 64
PARSE = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(USAGE)


class Report:
    """Collects output fields; rendered as text or as ``key=value`` records."""

    def __init__(self, verb, fmt):
        self.verb = verb
        self.fmt = fmt
        self.blocks = [{"verb": verb}]
        self.attachments = []

    def add(self, **fields):
        self.blocks[0].update(fields)

    def block(self, **fields):
        self.blocks.append(dict(fields))

    def attach(self, title, text):
        self.attachments.append((title, text))

    def render(self):
        if self.fmt == "records":
            out = formats.records(self.blocks)
            for title, text in self.attachments:
                out += f"attachment={title}\n" + text + "\n"
            return out
        lines = []
        for i, block in enumerate(self.blocks):
            if i:
                lines.append("")
            for key, value in block.items():
                if key == "verb" and i == 0:
                    continue
                if isinstance(value, (list, tuple)):
                    value = " ".join(str(v) for v in value)
                lines.append(f"{key}: {value}")
        for title, text in self.attachments:
            lines.append(f"# {title}")
            lines.append(text.rstrip("\n"))
        return "\n".join(lines) + "\n"


def _status_word(ok):
    return "YES" if ok else "NO"


def _verdict(report, v, prefix=""):
    report.add(**{prefix + "status": v.status.value, prefix + "explored": v.explored})
    if v.note:
        report.add(**{prefix + "note": v.note})


def _attach_certificates(report, args, v, label="certificate"):
    if args.certificate and v.yes:
        for k, cert in enumerate(v.certificates):
            report.attach(f"{label} {k}" if len(v.certificates) > 1 else label, formats.dump_certificate(cert))


def _table_text(values):
    return list(values)


# --------------------------------------------------------------------------
# loaders


def _image(path):
    return formats.read(path, formats.parse_image)


def _map(path):
    return formats.read(path, formats.parse_map)


def _hspace(path):
    return formats.read(path, formats.parse_hspace)


def _base(args, img, default=None):
    base = default if args.base is None else args.base
    if base is None:
        raise UsageError("--base is required")
    if not 0 <= base < img.n:
        raise UsageError(f"--base {base} outside 0..{img.n - 1}")
    return base


# --------------------------------------------------------------------------
# verbs


def cmd_continuity(args, report):
    f = _map(args.map)
    bad = continuity_violation(f)
    report.add(status=_status_word(bad is None))
    if bad is not None:
        a, b = bad
        report.add(witness=f"{a}~{b} but {f(a)}!~{f(b)}")
    return 0 if bad is None else 1


def cmd_homotopic(args, report):
    f, g = _map(args.f), _map(args.g)
    v = homotopic(f, g, args.cat, args.budget)
    _verdict(report, v)
    if v.yes:
        report.add(steps=v.certificate.steps)
    _attach_certificates(report, args, v)
    return EXIT[v.status]


def cmd_pointed_homotopic(args, report):
    f, g = _map(args.f), _map(args.g)
    base = _base(args, f.domain)
    if f(base) != g(base):
        raise UsageError(f"the maps disagree at the basepoint {base}")
    v = pointed_homotopic(f, g, args.cat, base, f(base), args.budget)
    _verdict(report, v)
    if v.yes:
        report.add(steps=v.certificate.steps)
    _attach_certificates(report, args, v)
    return EXIT[v.status]


def _image_decider(decide):
    def run(args, report):
        img = _image(args.image)
        v = decide(img, args.cat, args.budget)
        _verdict(report, v)
        if v.witness is not None:
            report.add(witness=_table_text(v.witness.values))
        _attach_certificates(report, args, v)
        return EXIT[v.status]

    return run


def cmd_equiv(args, report):
    X, Y = _image(args.x), _image(args.y)
    pointed = None
    if args.base is not None:
        pointed = (_base(args, X), args.base2 if args.base2 is not None else 0)
        if not 0 <= pointed[1] < Y.n:
            raise UsageError("--base2 outside the second image")
    v = homotopy_equivalent(X, Y, args.cat, args.budget, pointed)
    _verdict(report, v)
    if v.yes:
        f, g = v.witness
        report.add(f=_table_text(f.values), g=_table_text(g.values))
    _attach_certificates(report, args, v)
    return EXIT[v.status]


def _report_fields(r):
    out = {
        "status": r.is_hspace.status.value,
        "left_unit": r.left_unit.status.value,
        "right_unit": r.right_unit.status.value,
        "unital": str(r.unital).lower(),
        "left_unit_exact": str(r.left_unit_exact).lower(),
        "right_unit_exact": str(r.right_unit_exact).lower(),
    }
    if r.pointed is not None:
        out["pointed"] = r.pointed.status.value
    return out


def cmd_hspace_verify(args, report):
    H = _hspace(args.hspace)
    try:
        r = H.verify(args.budget, pointed=True)
    except DiscontinuousMultiplication as exc:
        (a, b), (c, d) = exc.witness
        report.add(status="NO", reason="discontinuous", witness=f"({a},{b})~({c},{d})")
        return 1
    report.add(**_report_fields(r))
    for label, v in (("left unit", r.left_unit), ("right unit", r.right_unit)):
        _attach_certificates(report, args, v, label)
    return EXIT[r.is_hspace.status]


def cmd_hspace_assoc(args, report):
    H = _hspace(args.hspace)
    exact = is_associative(H)
    report.add(associative=str(exact).lower())
    v = is_homotopy_associative(H, args.budget, pointed=args.pointed)
    _verdict(report, v)
    _attach_certificates(report, args, v)
    return EXIT[v.status]


def cmd_hspace_inverses(args, report):
    H = _hspace(args.hspace)
    try:
        alpha, beta = find_exact_inverses(H, args.budget, require_irreducible=not args.any_image)
        report.add(exact_left=_table_text(alpha.values), exact_right=_table_text(beta.values))
    except DigitopError as exc:
        report.add(exact=f"unavailable ({type(exc).__name__}: {exc})")
    left = has_left_homotopy_inverse(H, args.budget)
    right = has_right_homotopy_inverse(H, args.budget)
    _verdict(report, left, "left_")
    _verdict(report, right, "right_")
    for side, v in (("left", left), ("right", right)):
        if v.yes:
            report.add(**{f"{side}_inverse": _table_text(v.witness.values)})
    statuses = (left.status, right.status)
    worst = Status.NO if Status.NO in statuses else max(statuses, key=lambda s: s is Status.INCONCLUSIVE)
    report.add(status=worst.value)
    return EXIT[worst]


def cmd_hspace_hequiv(args, report):
    H1, H2 = _hspace(args.h1), _hspace(args.h2)
    v = h_equivalent(H1, H2, args.budget, pointed=args.pointed)
    _verdict(report, v)
    if v.yes:
        f, g = v.witness
        report.add(f=_table_text(f.values), g=_table_text(g.values))
    _attach_certificates(report, args, v)
    return EXIT[v.status]


def cmd_hspace_transport(args, report):
    H = _hspace(args.hspace)
    f = formats.read(args.f, formats.parse_map)
    g = formats.read(args.g, formats.parse_map)
    HY = transport_structure(H, f, g, args.budget)
    report.add(status="YES", basepoint=HY.basepoint)
    report.attach("transported", formats.dump_hspace(HY))
    return 0


def cmd_hspace_reduce(args, report):
    H = _hspace(args.hspace)
    if args.left_unital:
        R = left_unital_reduction(H, args.budget)
        report.add(status="YES", vertices=R.n, basepoint=R.basepoint)
    else:
        R, f, g = reduce_to_irreducible(H, args.budget)
        report.add(status="YES", vertices=R.n, basepoint=R.basepoint, f=_table_text(f.values), g=_table_text(g.values))
    report.attach("reduced", formats.dump_hspace(R))
    return 0


def cmd_hspace_search(args, report):
    img = _image(args.image)
    base = _base(args, img, 0)
    count = 0
    for H in search_hspace_multiplications(img, base, args.cat, args.budget, args.max_vertices):
        count += 1
        if args.limit is None or count <= args.limit:
            report.block(index=count - 1, mu=[v for row in H.mu for v in row])
    report.add(status=_status_word(count > 0), count=count)
    return 0 if count else 1


def cmd_np2_decompose(args, report):
    H = _hspace(args.hspace)
    d = decompose_np2(H, args.budget)
    report.add(
        status="YES",
        e=d.e,
        Z=list(d.Z),
        A=[f"{a},{b}" for a, b in sorted(d.A)],
        z_default="none" if d.z_default is None else d.z_default,
    )
    if d.Z:
        report.attach("magma", formats.dump_magma(d.magma(H.image)))
    return 0


def cmd_magma_extend(args, report):
    M = formats.read(args.magma, formats.parse_magma)
    H = magma_point_extension(M)
    report.add(status="YES", basepoint=H.basepoint)
    report.attach("hspace", formats.dump_hspace(H))
    return 0


def cmd_cayley(args, report):
    G, subset = formats.read(args.group, formats.parse_group)
    S = set(args.subset) if args.subset is not None else subset
    if S is None:
        raise UsageError("give --subset or a subset line in the group file")
    if any(not 0 <= s < G.n for s in S):
        raise UsageError("subset element outside the group")
    img = cayley_graph(G, S)
    report.add(status="YES", vertices=img.n, edges=[f"{a}-{b}" for a, b in img.edges])
    report.attach("image", formats.dump_image(img))
    _write_dot(args, img)
    return 0


def cmd_dtg_verify(args, report):
    img = _image(args.image)
    G, _ = formats.read(args.group, formats.parse_group)
    c = is_digital_topological_group(img, G, args.cat)
    report.add(status=_status_word(c.ok))
    if not c.ok:
        report.add(failing=c.note, witness=str(c.witness))
        return 1
    dtg = as_topological_group(img, G, args.cat)
    report.add(identity_neighborhood=sorted(identity_neighborhood(dtg)))
    if args.cat == 1:
        report.add(cayley_reconstruction=str(cayley_reconstruction_check(dtg)).lower())
    return 0


def cmd_np2_classify(args, report):
    img = _image(args.image)
    r = classify_np2_group_image(img)
    report.add(status=_status_word(r.ok), connected=str(r.connected).lower(), cluster_sizes=list(r.cluster_sizes))
    return 0 if r.ok else 1


def cmd_fixture(args, report):
    if args.name is None:
        report.add(status="YES", names=list(FIXTURES))
        return 0
    obj = fixture(args.name)
    if isinstance(obj, HSpaceStructure):
        text = formats.dump_hspace(obj)
    elif isinstance(obj, MagmaStructure):
        text = formats.dump_magma(obj)
    elif isinstance(obj, DigitalMap):
        text = formats.dump_map(obj)
    elif isinstance(obj, DigitalImage):
        text = formats.dump_image(obj)
        _write_dot(args, obj)
    else:  # pragma: no cover
        raise UsageError(f"fixture {args.name} has no file format")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        report.add(status="YES", written=args.out)
    else:
        report.add(status="YES", name=args.name)
        report.attach(args.name, text)
    return 0


def cmd_enumerate(args, report):
    count = 0
    for img in enumerate_images(args.n):
        count += 1
        if not args.count:
            report.block(index=count - 1, edges=[f"{a}-{b}" for a, b in img.edges] or ["none"])
    report.add(status="YES", n=args.n, count=count)
    return 0


def _write_dot(args, img):
    if getattr(args, "dot", None):
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(formats.to_dot(img))


# --------------------------------------------------------------------------
# argument parsing


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cat", type=int, choices=(1, 2), default=1, help="NP category (default 1)")
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="visited-map cap")
    common.add_argument("--base", type=_nonneg, help="basepoint vertex")
    common.add_argument("--certificate", action="store_true", help="print certificates for YES verdicts")
    common.add_argument("--dot", metavar="PATH", help="also write the relevant image as Graphviz DOT")
    common.add_argument("--format", choices=("text", "records"), default="text")

    p = _Parser(prog="digitop", description="Decision procedures for digital images, maps and H-spaces.")
    sub = p.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)
    sub.required = True

    def verb(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(run=fn)
        return sp

    verb("continuity", cmd_continuity, "is a map continuous").add_argument("map")
    for name, fn, text in (
        ("homotopic", cmd_homotopic, "are two maps homotopic"),
        ("pointed-homotopic", cmd_pointed_homotopic, "pointed homotopy at --base"),
    ):
        sp = verb(name, fn, text)
        sp.add_argument("f")
        sp.add_argument("g")
    for name, decide in (("contractible", is_contractible), ("irreducible", is_irreducible), ("rigid", is_rigid)):
        verb(name, _image_decider(decide), f"is the image {name}").add_argument("image")
    sp = verb("equiv", cmd_equiv, "are two images homotopy equivalent")
    sp.add_argument("x")
    sp.add_argument("y")
    sp.add_argument("--base2", type=_nonneg, help="basepoint of the second image when --base is given")
    verb("hspace-verify", cmd_hspace_verify, "check the H-space axioms").add_argument("hspace")
    sp = verb("hspace-assoc", cmd_hspace_assoc, "homotopy associativity")
    sp.add_argument("hspace")
    sp.add_argument("--pointed", action="store_true")
    sp = verb("hspace-inverses", cmd_hspace_inverses, "exact and homotopy inverses")
    sp.add_argument("hspace")
    sp.add_argument("--any-image", action="store_true", help="skip the irreducibility precondition for exact inverses")
    sp = verb("hspace-hequiv", cmd_hspace_hequiv, "are two H-spaces H-equivalent")
    sp.add_argument("h1")
    sp.add_argument("h2")
    sp.add_argument("--pointed", action="store_true")
    sp = verb("hspace-transport", cmd_hspace_transport, "transport a structure along f, g")
    sp.add_argument("hspace")
    sp.add_argument("f")
    sp.add_argument("g")
    sp = verb("hspace-reduce", cmd_hspace_reduce, "reduce to an irreducible image")
    sp.add_argument("hspace")
    sp.add_argument("--left-unital", action="store_true")
    sp = verb("hspace-search", cmd_hspace_search, "enumerate H-space multiplications")
    sp.add_argument("image")
    sp.add_argument("--limit", type=_nonneg)
    sp.add_argument("--max-vertices", type=_positive)
    verb("np2-decompose", cmd_np2_decompose, "split an irreducible NP2 H-space").add_argument("hspace")
    verb("magma-extend", cmd_magma_extend, "adjoin an isolated unit to a magma").add_argument("magma")
    sp = verb("cayley", cmd_cayley, "Cayley graph of a group")
    sp.add_argument("group")
    sp.add_argument("--subset", type=_nonneg, nargs="*")
    sp = verb("dtg-verify", cmd_dtg_verify, "is (image, group) a digital topological group")
    sp.add_argument("image")
    sp.add_argument("group")
    verb("np2-classify", cmd_np2_classify, "is the image an equal-cluster graph").add_argument("image")
    sp = verb("fixture", cmd_fixture, "emit a named example structure")
    sp.add_argument("name", nargs="?", choices=FIXTURES)
    sp.add_argument("--out", metavar="PATH")
    sp = verb("enumerate", cmd_enumerate, "one image per isomorphism class")
    sp.add_argument("n", type=_positive)
    sp.add_argument("--count", action="store_true", help="print only the count")
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    report = Report(args.verb, args.format)
    try:
        code = args.run(args, report)
    except ParseError as exc:
        print(f"digitop: parse error: {exc}", file=sys.stderr)
        return PARSE
    except (UsageError, VertexOutOfRange, UnknownFixture) as exc:
        print(f"digitop: {exc}", file=sys.stderr)
        return USAGE
    except CapExceeded as exc:
        report.add(status="INCONCLUSIVE", note=str(exc))
        out.write(report.render())
        return 2
    except DigitopError as exc:
        report.add(status="NO", reason=f"{type(exc).__name__}: {exc}")
        out.write(report.render())
        return 1
    out.write(report.render())
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
