# filename: nodes/end_node.py

import sys

from pocketflow import Node


class EndNode(Node):
    def prep(self, shared: dict):
        return shared.get("error_message"), shared.get("emit", True)

    def exec(self, prep_res):
        message, emit = prep_res
        if emit and message:
            print(f"error: {message}", file=sys.stderr)
        # This node does nothing else and returns no action, ending the flow.
