# Settings file read by the CLI when --config is not given
SETTINGS_FILENAME = "lig_settings.json"

# Action encoding
MINUS = -1
PLUS = 1
ACTIONS = (MINUS, PLUS)

# Domain bitmasks used by search and propagation
DOM_MINUS = 1
DOM_PLUS = 2
DOM_BOTH = DOM_MINUS | DOM_PLUS

# Brute force enumerates 2^n joint actions; refuse above this n by default
DEFAULT_BRUTE_FORCE_CAP = 25

# Games up to this size keep a dense weight matrix next to the arc lists
DENSE_LIMIT = 64

# Gadget slack, any value in (0, 1) works
DEFAULT_GADGET_EPSILON = 0.5

# Absolute tolerance for symmetric / indiscriminate detection
POTENTIAL_TOLERANCE = 1e-12

# Rows per numpy batch in the vectorized brute force
BRUTE_FORCE_CHUNK = 1 << 14
