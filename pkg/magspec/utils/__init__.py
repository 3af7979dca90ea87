from .io import dumps_json, write_json, write_csv, dump_matrix


__all__ = ["dumps_json", "write_json", "write_csv", "dump_matrix"]
