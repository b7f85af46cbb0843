from cli import bound_cmd, cocycle_cmd, color_cmd, group_cmd, homology_cmd, quandle_cmd, scan_cmd

COMMANDS = [group_cmd, quandle_cmd, homology_cmd, cocycle_cmd, scan_cmd, color_cmd, bound_cmd]

__all__ = ["COMMANDS"]
