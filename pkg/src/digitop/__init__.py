"""Decision procedures for digital images in the graph model: continuity,
NP_1/NP_2 homotopy, H-spaces and digital topological groups."""

from .errors import DigitopError
from .group import (
    GroupStructure,
    cayley_graph,
    cayley_reconstruction_check,
    classify_np2_group_image,
    cyclic_group,
    enumerate_groups,
    generates,
    hspace_from_group,
    identity_neighborhood,
    is_digital_topological_group,
    make_group,
)
from .homotopy import (
    HomotopyCertificate,
    HomotopyVerdict,
    Status,
    check_certificate,
    homotopic,
    homotopy_class,
    homotopy_equivalent,
    is_contractible,
    is_irreducible,
    is_rigid,
    pointed_homotopic,
    single_step_homotopic,
)
from .hspace import (
    HSpaceStructure,
    MagmaStructure,
    associator_probe,
    decompose_np2,
    find_exact_inverses,
    fixture,
    h_equivalent,
    is_associative,
    is_homotopy_associative,
    left_unital_reduction,
    magma_point_extension,
    search_hspace_multiplications,
    transport_structure,
    verify_hspace,
)
from .image import DigitalImage, components, enumerate_images, graph_isomorphism, is_connected, make_image
from .kernels import BACKEND
from .maps import (
    DigitalMap,
    compose,
    constant_map,
    enumerate_continuous_maps,
    identity_map,
    is_continuous,
    np_product,
)

__version__ = "0.1.0"
