"""
Reader and writer for the planar_code binary format.

A stream starts with the header ``>>planar_code<<`` (optionally ``>>planar_code le<<``
or ``>>planar_code be<<``). Each graph is its order ``n`` followed, for every vertex
``1..n``, by its neighbors in clockwise order and a terminating 0. Values are single
bytes; a leading 0 byte switches the record to 2-byte values, which is needed from
``n = 256`` on.
"""
import logging
import struct

from qplanar.exceptions import GraphPreconditionError, PlanarCodeError
from qplanar.planarity import RotationEmbedding, is_planar

logger = logging.getLogger(__name__)

HEADERS = {
    b">>planar_code<<": "<",
    b">>planar_code le<<": "<",
    b">>planar_code be<<": ">",
}
ONE_BYTE_LIMIT = 256


class _Cursor:
    """
    Position in a planar_code payload.
    """

    def __init__(self, data, offset, width, endian):
        self.data = data
        self.offset = offset
        self.width = width
        self.endian = endian

    def read(self):
        if self.offset + self.width > len(self.data):
            raise PlanarCodeError(offset=self.offset, message="truncated record")
        if self.width == 1:
            value = self.data[self.offset]
        else:
            value = struct.unpack_from(f"{self.endian}H", self.data, self.offset)[0]
        self.offset += self.width
        return value


def _read_header(data):
    for header, endian in HEADERS.items():
        if data.startswith(header):
            return len(header), endian
    raise PlanarCodeError(offset=0, message="missing >>planar_code<< header")


def _read_record(data, offset, endian):
    cursor = _Cursor(data, offset, 1, endian)
    n = cursor.read()
    if n == 0:
        cursor.width = 2
        n = cursor.read()
    record_start = offset
    rotation = []
    for v in range(n):
        order = []
        while True:
            position = cursor.offset
            value = cursor.read()
            if value == 0:
                break
            if value > n:
                raise PlanarCodeError(offset=position, message=f"neighbor {value} of vertex {v + 1} exceeds n = {n}")
            order.append(value - 1)
        rotation.append(tuple(order))
    for u, order in enumerate(rotation):
        for v in order:
            if u not in rotation[v]:
                raise PlanarCodeError(
                    offset=record_start, message=f"edge {u + 1}-{v + 1} is listed in one direction only"
                )
    return RotationEmbedding(rotation=rotation), cursor.offset


def read_planar_code(data, embeddings=False):
    """
    Yield the graphs of a planar_code payload.

    Arguments:
        data (bytes): the whole payload, header included.
        embeddings (bool): yield RotationEmbedding instead of Graph, keeping the rotation.

    Raises:
        PlanarCodeError: On a missing header, a truncated record, an out-of-range
          neighbor or a one-sided edge; the message names the byte offset.
    """
    offset, endian = _read_header(data)
    count = 0
    while offset < len(data):
        embedding, offset = _read_record(data, offset, endian)
        count += 1
        yield embedding if embeddings else embedding.graph()
    logger.debug("read %d graphs from planar_code", count)


def _encode_record(embedding, endian):
    n = embedding.n
    values = [n]
    for order in embedding.rotation:
        values.extend(v + 1 for v in order)
        values.append(0)
    if n < ONE_BYTE_LIMIT:
        return bytes(values)
    return b"\x00" + struct.pack(f"{endian}{len(values)}H", *values)


def write_planar_code(items):
    """
    Encode graphs or embeddings as a planar_code payload.

    Graphs are embedded first. The ``le`` header is used as soon as a record needs 2-byte values.

    Arguments:
        items (iterable): Graph or RotationEmbedding instances.

    Raises:
        GraphPreconditionError: If a graph is not planar.
    """
    embeddings = []
    for index, item in enumerate(items):
        if not isinstance(item, RotationEmbedding):
            embedding = is_planar(item)
            if embedding is None:
                raise GraphPreconditionError(operation="write_planar_code", message=f"graph {index} is not planar")
            item = embedding
        embeddings.append(item)
    header = b">>planar_code<<"
    if any(embedding.n >= ONE_BYTE_LIMIT for embedding in embeddings):
        header = b">>planar_code le<<"
    return header + b"".join(_encode_record(embedding, "<") for embedding in embeddings)
