from .bench import BenchCommand
from .export import ExportCommand
from .generate import GenerateCommand
from .oracle import OracleCommand
from .solve import SolveCommand
from .verify import VerifyCommand
