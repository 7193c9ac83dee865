"""Neural wug-scoring models trained on anamorph annotated exports."""

from .artifact import ModelArtifact, load_artifact
from .data import TARGET_TAGS, AnnotatedRow, NeuralDataError, read_annotated
from .models import Seq2Seq, SequenceClassifier
from .scoring import predict_fap2, predict_form, score_file, score_row, score_rows
from .training import TrainConfig, train_m1, train_m2, train_m3
from .vocab import SymbolVocab

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
