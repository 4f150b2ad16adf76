from .models import (
    DEFAULT_CODE_MAP,
    ERDOS_RENYI,
    FAMILIES,
    MAJORITY,
    PREF_ATTACH,
    UNIFORM_RANDOM,
    GenConfig,
    LearnConfig,
    PlayerFit,
    VoteMatrix,
)
from .generators import gen_erdos_renyi, gen_pref_attach, gen_uniform_random, generate
from .learner import fit_player, learn_lig, learn_lig_with_fits, psne_representation_rate
from .votes import ingest_votes, read_votes_csv, write_votes_csv

__all__ = [
    "ERDOS_RENYI",
    "UNIFORM_RANDOM",
    "PREF_ATTACH",
    "FAMILIES",
    "MAJORITY",
    "DEFAULT_CODE_MAP",
    "GenConfig",
    "LearnConfig",
    "PlayerFit",
    "VoteMatrix",
    "gen_erdos_renyi",
    "gen_uniform_random",
    "gen_pref_attach",
    "generate",
    "fit_player",
    "learn_lig",
    "learn_lig_with_fits",
    "psne_representation_rate",
    "ingest_votes",
    "read_votes_csv",
    "write_votes_csv",
]
