from .target import TargetState, load_target_csv, load_target_json, parse_vector
from .synthesis import prepare, synthesize_prep
from .costs import PrepCost, PrepScheme, measured_prep_count, prep_cost, random_target
