from .abcs import AbcsLearner
from .base import FrozenPolicyCache, Learner, Streams
from .boot_cfr import BootCfrLearner
from .bql import BqlLearner
from .es_mccfr import EsMccfrLearner
from .max_cfr import MaxCfrLearner
from .os_mccfr import OsMccfrLearner
from .policies import (argmax_index, field_probs, hedge_policy, sample_index,
                       sample_outcome, softmax_policy)
from .schedules import (GeometricSchedule, HedgeSchedule,
                        OS_MCCFR_EPSILON_DEFAULT, abcs_schedule_default,
                        abcs_schedule_tictactoe, bql_temperature_default,
                        bql_temperature_tictactoe, maxcfr_temperature_default)
from .tables import AveragePolicyTable, DualQTables, QTable

ALGO_NAMES = ("bql", "es-mccfr", "os-mccfr", "max-cfr", "bootcfr", "abcs")

__all__ = [
    "AbcsLearner", "FrozenPolicyCache", "Learner", "Streams", "BootCfrLearner",
    "BqlLearner", "EsMccfrLearner", "MaxCfrLearner", "OsMccfrLearner",
    "argmax_index", "field_probs", "hedge_policy", "sample_index",
    "sample_outcome", "softmax_policy", "GeometricSchedule", "HedgeSchedule",
    "OS_MCCFR_EPSILON_DEFAULT", "abcs_schedule_default",
    "abcs_schedule_tictactoe", "bql_temperature_default",
    "bql_temperature_tictactoe", "maxcfr_temperature_default",
    "AveragePolicyTable", "DualQTables", "QTable", "ALGO_NAMES",
]
