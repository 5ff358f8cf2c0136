"""Regenerate the sample input files under fixtures/."""

import sys
from pathlib import Path

from digitop import formats
from digitop.group import cyclic_group
from digitop.hspace import FIXTURES, HSpaceStructure, MagmaStructure, fixture
from digitop.image import cycle
from digitop.maps import DigitalMap, identity_map

SUFFIX = {HSpaceStructure: ".hsp", MagmaStructure: ".mag", DigitalMap: ".map"}


def main(out):
    out = Path(out)
    out.mkdir(exist_ok=True)
    for name in FIXTURES:
        obj = fixture(name)
        if isinstance(obj, HSpaceStructure):
            text = formats.dump_hspace(obj)
        elif isinstance(obj, DigitalMap):
            text = formats.dump_map(obj)
        else:
            text = formats.dump_image(obj)
        (out / (name + SUFFIX.get(type(obj), ".img"))).write_text(text)
    W = fixture("five_twist_image")
    (out / "w.img").write_text(formats.dump_image(W))
    (out / "id6.map").write_text(formats.dump_map(identity_map(W)))
    (out / "id5.map").write_text(formats.dump_map(identity_map(cycle(5))))
    (out / "c5.img").write_text(formats.dump_image(cycle(5)))
    (out / "z4.grp").write_text(formats.dump_group(cyclic_group(4)))
    (out / "z5.grp").write_text(formats.dump_group(cyclic_group(5), {1}))
    z5 = [[(a + b) % 5 for b in range(5)] for a in range(5)]
    (out / "c5_z5.mag").write_text(formats.dump_magma(MagmaStructure(cycle(5), z5, 1)))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "fixtures")
