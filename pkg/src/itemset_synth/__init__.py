"""Synthetic transactional data from itemset-based generative models."""
from .characteristics import CharacteristicsVector, aggregate, characteristics
from .charts import radar_data
from .dataset import Dataset, dumps_dataset, load_dataset, loads_dataset, save_dataset, support
from .exceptions import ModelDegeneracyError
from .fidelity import (FidelityReport, itemset_precision, itemset_recall, pattern_fidelity,
                       privacy_score, set_precision, set_recall)
from .fim import FrequentItemset, FrequentItemsetSet, brute_force_frequent, mine_frequent
from .iim import IIMGenerator, IimModel, greedy_cover, learn_iim
from .igm import IGMGenerator, IgmModel, filter_significant, learn_igm
from .lda import LDAGenerator, LdaModel, choose_k, learn_lda
from .models import load_model, save_model

__version__ = "0.1.0"

__all__ = [
    "CharacteristicsVector", "Dataset", "FidelityReport", "FrequentItemset",
    "FrequentItemsetSet", "IGMGenerator", "IIMGenerator", "IgmModel", "IimModel",
    "LDAGenerator", "LdaModel", "ModelDegeneracyError", "aggregate", "brute_force_frequent",
    "characteristics", "choose_k", "dumps_dataset", "filter_significant", "greedy_cover",
    "itemset_precision", "itemset_recall", "learn_iim", "learn_igm", "learn_lda",
    "load_dataset", "load_model", "loads_dataset", "mine_frequent", "pattern_fidelity",
    "privacy_score", "radar_data", "save_dataset", "save_model", "set_precision",
    "set_recall", "support",
]
