# filename: nodes/__init__.py

from .check_node import CheckNode
from .construct_node import ConstructNode
from .convert_node import ConvertNode
from .end_node import EndNode
from .generate_node import GenerateNode
from .load_structure_node import LoadStructureNode
from .mc_node import McNode
from .report_node import ReportNode
from .roundtrip_node import RoundtripNode
from .write_output_node import WriteOutputNode
