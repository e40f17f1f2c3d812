from .pandas_result_writer import PandasResultWriter

__all__ = ["PandasResultWriter"]
