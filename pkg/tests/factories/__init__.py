"""Factory exports"""

from .common_factories import CommonConfigFactory, ModelSummaryFactory, TrainConfigFactory
from .mlp_factories import MlpExperimentConfigFactory
from .nfn_factories import NfnConfigFactory, PipelineConfigFactory, SomScheduleFactory

__all__ = [
    "CommonConfigFactory",
    "MlpExperimentConfigFactory",
    "ModelSummaryFactory",
    "NfnConfigFactory",
    "PipelineConfigFactory",
    "SomScheduleFactory",
    "TrainConfigFactory",
]
