"""Existence of {K_1,1, ..., K_1,k, T(2k+1)}-factors in small graphs: the
isolated-vertex criterion, four sufficient conditions, explicit factors and
the extremal graphs showing the conditions are sharp."""
from importlib import resources

from .builder import Block, FactorCertificate, find_factor, spanning_trees, verify_certificate
from .factors import (
    DeficiencyReport,
    check_thm11,
    check_thm13,
    check_thm14,
    check_thm15,
    deficiency,
    extremal_edge_threshold,
    has_factor_thm11,
    independence_number,
    independent_sets_of_size,
    is_t_connected,
)
from .graph import (
    Graph,
    components,
    delete_vertices,
    extremal_G1,
    extremal_remark31,
    extremal_remark41,
    extremal_remark51,
    isolated_count,
    join,
    min_degree,
    new_graph,
    parse_graph6,
    random_gnp,
    standard_graph,
    union,
    write_graph6,
)
from .spectral import Spectrum, check_lemma21, check_thm12, eigenvalues_sym, laplacian, laplacian_spectrum
from .trees import TreeCatalog, canonical_code, construct_TR, enumerate_catalog, is_member, validate_base
from .verdict import ConditionVerdict


def load_corpus() -> list[str]:
    """graph6 lines of every connected graph on 1..8 vertices."""
    text = resources.files(__package__).joinpath("data/connected_le8.g6").read_text()
    return text.split()
