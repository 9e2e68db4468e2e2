"""Online edge coloring of d-degenerate graphs with per-edge advice."""

from .advice import (
    AdviceRecord,
    AdviceTape,
    RecordFields,
    bits_per_edge,
    ceil_log2,
    degeneracy_from_length,
    encode_header,
    encode_tape,
    header_bits,
    pack_record,
    pad_degeneracy,
    read_header,
    unpack_record,
)
from .errors import (
    AdviceExhausted,
    DuplicateEdge,
    ImproperColoring,
    MalformedAdvice,
    MalformedTape,
    NoMonochromeFamily,
    NotBipartite,
    ParseError,
    PreconditionViolated,
    RecoloringAttempt,
    ResourceLimit,
    SelfLoop,
)
from .adversaries import (
    EliminationTranscript,
    PermutationGameResult,
    PermutationInstance,
    build_permutation_instance,
    elimination_game,
    permutation_game,
    pigeonhole_thresholds,
    rigidity_check,
    rounds_to_extinction,
    select_same_colored_stars,
    variant_family,
    prefix_family,
)
from .coloring import (
    Coloring,
    brute_force_chromatic_index,
    brute_force_colorable,
    chromatic_index,
    color_degenerate,
    exact_color,
    konig_color,
    vizing_plus_one,
)
from .generators import (
    build_coupled_pair,
    build_coupler,
    gen_bipartite,
    gen_d_degenerate,
    gen_forest,
    gen_star,
)
from .graphs import (
    DegeneracyOrder,
    Edge,
    EdgeClassification,
    EdgeStream,
    Graph,
    back_degrees,
    bipartition,
    classify,
    colors_used,
    degeneracy,
    edge_pair,
    is_bipartite,
    is_forest,
    is_proper,
    parse_stream,
    serialize_stream,
    stream_from_pairs,
)
from .oracle import (
    EdgeAdvice,
    OracleResult,
    PartitionTrace,
    build_advice,
    build_partition,
    optimal_coloring,
)
from .runtime import (
    AdviceAlgorithm,
    AdviceRun,
    Greedy,
    GreedyVariant,
    RequestSource,
    RunReport,
    TapeSource,
    run_advice,
    run_greedy,
    simulate,
)

__version__ = "0.1.0"
