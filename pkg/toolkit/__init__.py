"""
Dosya biçimleri, sertifikalar, üreteç ve sayım araçları
"""
from toolkit.certificates import CertificateError, dumps, loads, verify_certificate
from toolkit.enumeration import EnumerationRunner, brute_force_free, graph_from_code, iter_graphs
from toolkit.formats import FORMATS, FormatError, format_graph, parse_graph, read_graph
from toolkit.generator import KINDS, GraphGenerator

__all__ = [
    'CertificateError', 'dumps', 'loads', 'verify_certificate',
    'EnumerationRunner', 'brute_force_free', 'graph_from_code', 'iter_graphs',
    'FORMATS', 'FormatError', 'format_graph', 'parse_graph', 'read_graph',
    'KINDS', 'GraphGenerator',
]
