"""Quantum perceptron simulation: qubit inputs, matrix weights, outer-product learning."""
from .classical import Activation, ClassicalPerceptron, cl_forward, cl_init_weights, cl_learn_step, cl_train
from .errors import (
    ArityError,
    ConfigError,
    OutputOperatorError,
    PatternError,
    QPerceptronError,
    StepSizeError,
    UnmeasurableStateError,
    UnnormalizableError,
    WiringError,
)
from .optics import (
    BeamSplitter,
    OpticalCircuit,
    PhaseShifter,
    decompose_weight,
    is_passive,
    recompose,
    singular_values,
    unitarity_deviation,
)
from .perceptron import (
    IDENTITY,
    LayeredNetwork,
    LearningConfig,
    OutputOperator,
    Perceptron,
    TraceStep,
    TrainingTrace,
    compose_layer,
    forward,
    init_weights,
    learn_step,
    predicted_ratio,
    train,
    train_cyclic,
)
from .qstate import KET0, KET1, Qubit, StateVector, born_probs, inner, make_qubit, outer

__version__ = "0.1.0"
