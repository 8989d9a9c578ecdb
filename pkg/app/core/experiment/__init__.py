from app.core.experiment.config import ModelSpec, ExperimentConfig, load_experiment_config
from app.core.experiment.dgp import replication_rng, sample_mixture
from app.core.experiment.runner import (
    ReplicationOutcome, TableRow, run_single_replication, run_replications,
    run_experiment, aggregate, standardized_normality
)
from app.core.experiment.emitters import emit_table, emit_figure_data
