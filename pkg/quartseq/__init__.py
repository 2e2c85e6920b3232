from dotenv import load_dotenv

load_dotenv()

__version__ = "0.1.0"

from .pipeline.pipeline_schema import Pipeline
