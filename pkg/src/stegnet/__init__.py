"""Graph analysis for steganographer networks.

Passive attack (minimum-cost separation of encoders from decoders), encoder
selection for neighbour broadcast (minimum-weight dominating set) and
low-risk communication planning (shortest path, MST, Steiner approximation).
"""

from stegnet.attack import (
    ContractionMap,
    CutPlan,
    Method,
    TerminalSpec,
    augment_super,
    contract,
    plan_cut,
    verify_disconnection,
)
from stegnet.comms import (
    SteinerPlan,
    Variant,
    comms_plan,
    mst_plan,
    prob_to_additive,
    shortest_path_plan,
    steiner_plan,
)
from stegnet.dominator import (
    DominatingSet,
    action_vector,
    coverage_holds,
    is_dominating,
    mwds_exact,
    mwds_greedy,
)
from stegnet.errors import (
    GraphError,
    NoPathError,
    ParseError,
    SizeLimitError,
    StegnetError,
    TerminalSpecError,
    UnknownVertexError,
)
from stegnet.flow import (
    Algorithm,
    CutResult,
    FlowNetwork,
    FlowResult,
    max_flow,
    min_cut,
    residual_reachable,
    to_flow_network,
)
from stegnet.graph import (
    Graph,
    has_path,
    parse_graph,
    random_graph,
    serialize_graph,
    total_edge_weight,
)

__version__ = "0.1.0"
