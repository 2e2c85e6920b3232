from .fixed_sequence_construction import FixedSequenceConstruction, solve_abc, square_relation
from .mestre_construction import MestreConstruction
from .pipeline_component_schema import PipelineComponent
