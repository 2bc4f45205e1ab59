"""MLP baseline module.

2-7-1 multilayer perceptron trained by online backpropagation under the same data, epochs and
shuffle seed as NFN-MK, so the two can be compared row by row.
"""

from .config import MlpConfig, MlpExperimentConfig
from .domain import (
    MlpGradients,
    MlpModel,
    MlpModelRepository,
    MlpReport,
    mlp_forward,
    mlp_gradients,
    mlp_init,
    mlp_step,
    mlp_train,
)
from .infrastructure import JsonMlpModelRepository
from .usecases import EvaluateMlpUseCase, TrainMlpUseCase, train_baseline

__all__ = [
    "EvaluateMlpUseCase",
    "JsonMlpModelRepository",
    "MlpConfig",
    "MlpExperimentConfig",
    "MlpGradients",
    "MlpModel",
    "MlpModelRepository",
    "MlpReport",
    "TrainMlpUseCase",
    "mlp_forward",
    "mlp_gradients",
    "mlp_init",
    "mlp_step",
    "mlp_train",
    "train_baseline",
]
