"""JSON persistence for learned models."""
from __future__ import annotations

import json
import os

from .iim import IIMGenerator, IimModel
from .igm import IGMGenerator, IgmModel
from .lda import LDAGenerator, LdaModel

MODEL_KINDS = {
    "igm": (IgmModel, IGMGenerator),
    "lda": (LdaModel, LDAGenerator),
    "iim": (IimModel, IIMGenerator),
}


def model_to_json(model) -> str:
    return json.dumps(model.to_dict(), sort_keys=True, separators=(",", ":")) + "\n"


def model_from_dict(obj: dict):
    kind = obj.get("kind")
    if kind not in MODEL_KINDS:
        raise ValueError(f"unknown model kind {kind!r}")
    return MODEL_KINDS[kind][0].from_dict(obj)


def save_model(model, path) -> None:
    tmp = f"{os.fspath(path)}.tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(model_to_json(model))
    os.replace(tmp, path)


def load_model(path):
    with open(path, encoding="utf-8") as fh:
        return model_from_dict(json.load(fh))


def estimator_for(model):
    """A fitted generator wrapping ``model``."""
    return MODEL_KINDS[model.kind][1].from_model(model)
