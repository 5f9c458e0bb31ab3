"""
Global configuration settings for the RACG boundary toolkit.
"""

# ============================================================================
# SUBDIVISION SEARCH
# ============================================================================

# Largest graph (in vertices) the exact subdivision search will accept
SEARCH_BUDGET = 30

SEARCH_CONFIG = {
    'budget': SEARCH_BUDGET,
    'show_progress': False,      # tqdm bar over root assignments
}

assert SEARCH_CONFIG['budget'] >= 6, "Budget must admit at least a bare K33"

# ============================================================================
# REDUCTION ENGINE
# ============================================================================

REDUCTION_CONFIG = {
    'deadline_seconds': None,       # None = run to completion
    'endpoint_fallback': True,      # search doubles over bad-edge endpoints if constructions fail
    'exhaustive_fallback': True,    # then search the double over every other vertex
    'skip_terminal_reselection': True,  # a B = 0 successor is terminal as constructed
    'intermediate_budget': None,    # vertex budget for doubled graphs; None = twice SEARCH_BUDGET
}

# ============================================================================
# BOUNDARY CLASSIFIER
# ============================================================================

CLASSIFIER_CONFIG = {
    'probe_planar_doubles': True,   # look for a single double with planar graph
    'check_induced_pi': True,       # search the input graph itself for an induced Pi
    'attach_witnesses': True,       # build symbolic witnesses for terminal patterns
}

# ============================================================================
# INPUT/OUTPUT CONFIGURATION
# ============================================================================

SUPPORTED_GRAPH_FORMATS = ['edgelist', 'dot', 'json']

# File extension -> parser format
FORMAT_EXTENSIONS = {
    '.txt': 'edgelist',
    '.edges': 'edgelist',
    '.edgelist': 'edgelist',
    '.dot': 'dot',
    '.gv': 'dot',
    '.json': 'json',
}

assert set(FORMAT_EXTENSIONS.values()) <= set(SUPPORTED_GRAPH_FORMATS)

# Vertex labels accepted by the text parsers
LABEL_PATTERN = r"[A-Za-z0-9_#']+"

SCHEMA_VERSION = "1"
DOCUMENT_KINDS = ['reduction', 'classification', 'witness']

GENERATOR_FAMILIES = [
    'cycle', 'path', 'mobius', 'k33_subdiv', 'k5_subdiv',
    'pi', 'fig5_right', 'petersen', 'theta',
]

# ============================================================================
# COMMAND LINE
# ============================================================================

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_BUDGET_EXCEEDED = 2
EXIT_VERIFICATION_FAILED = 3

# ============================================================================
# LOGGING
# ============================================================================

LOG_LEVEL = 'WARNING'  # Options: DEBUG, INFO, WARNING, ERROR
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_FILE = None  # e.g. 'racg_boundary.log'
