# filename: app/flows.py

from pocketflow import Flow
from nodes.check_node import CheckNode
from nodes.construct_node import ConstructNode
from nodes.convert_node import ConvertNode
from nodes.end_node import EndNode
from nodes.generate_node import GenerateNode
from nodes.load_structure_node import LoadStructureNode
from nodes.mc_node import McNode
from nodes.report_node import ReportNode
from nodes.roundtrip_node import RoundtripNode
from nodes.write_output_node import WriteOutputNode


def create_check_flow() -> Flow:
    """
    Creates and returns the check flow.
    Loads one or more structure files and runs the checker of each kind.
    """
    load_node = LoadStructureNode()
    check_node = CheckNode()
    report_node = ReportNode()
    end_node = EndNode()

    load_node >> check_node >> report_node
    load_node - "error" >> end_node
    check_node - "error" >> end_node

    return Flow(start=load_node)


def create_convert_flow() -> Flow:
    """
    Creates and returns the flow converting between 2-term structures and 2-algebras.
    """
    load_node = LoadStructureNode()
    convert_node = ConvertNode()
    write_node = WriteOutputNode()
    end_node = EndNode()

    load_node >> convert_node >> write_node
    load_node - "error" >> end_node
    convert_node - "error" >> end_node
    write_node - "error" >> end_node
    write_node >> end_node

    return Flow(start=load_node)


def create_construct_flow() -> Flow:
    """
    Creates and returns the flow running one construction recipe on a structure file.
    """
    load_node = LoadStructureNode()
    construct_node = ConstructNode()
    write_node = WriteOutputNode()
    end_node = EndNode()

    load_node >> construct_node >> write_node
    load_node - "error" >> end_node
    construct_node - "error" >> end_node
    write_node - "error" >> end_node
    write_node >> end_node

    return Flow(start=load_node)


def create_mc_flow() -> Flow:
    """
    Creates and returns the Maurer-Cartan flow for a difference algebra file.
    """
    load_node = LoadStructureNode()
    mc_node = McNode()
    report_node = ReportNode()
    end_node = EndNode()

    load_node >> mc_node >> report_node
    load_node - "error" >> end_node
    mc_node - "error" >> end_node

    return Flow(start=load_node)


def create_gen_flow() -> Flow:
    """
    Creates and returns the flow emitting catalog instances of one kind.
    """
    generate_node = GenerateNode()
    write_node = WriteOutputNode()
    end_node = EndNode()

    generate_node >> write_node
    generate_node - "error" >> end_node
    write_node - "error" >> end_node
    write_node >> end_node

    return Flow(start=generate_node)


def create_roundtrip_flow() -> Flow:
    """
    Creates and returns the flow applying every fitting correspondence and reporting round trips.
    """
    load_node = LoadStructureNode()
    roundtrip_node = RoundtripNode()
    report_node = ReportNode()
    end_node = EndNode()

    load_node >> roundtrip_node >> report_node
    load_node - "error" >> end_node
    roundtrip_node - "error" >> end_node

    return Flow(start=load_node)
