"""
Tests for the planar_code reader and writer.
"""
import struct

import ddt
from django.test import TestCase

from qplanar.enumeration import canonical_form, gen_triangulations, read_planar_code, write_planar_code
from qplanar.exceptions import GraphPreconditionError, PlanarCodeError
from qplanar.graphs import complete, wheel
from qplanar.planarity import RotationEmbedding

K4_RECORD = bytes([4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0])


@ddt.ddt
class TestReadPlanarCode(TestCase):
    """
    Tests for read_planar_code.
    """

    def test_k4(self):
        graphs = list(read_planar_code(b">>planar_code<<" + K4_RECORD))

        self.assertEqual(17, len(K4_RECORD))
        self.assertEqual([complete(4)], graphs)

    def test_rotation_is_kept(self):
        [embedding] = read_planar_code(b">>planar_code<<" + K4_RECORD, embeddings=True)

        self.assertEqual((1, 2, 3), embedding.rotation[0])
        self.assertEqual((0, 3, 2), embedding.rotation[1])

    def test_empty_payload(self):
        self.assertEqual([], list(read_planar_code(b">>planar_code<<")))

    def test_big_endian_two_byte_record(self):
        values = [4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0]
        data = b">>planar_code be<<" + b"\x00" + struct.pack(f">{len(values)}H", *values)

        self.assertEqual([complete(4)], list(read_planar_code(data)))

    @ddt.data(
        (b"planar_code" + K4_RECORD, 0),
        (b">>planar_code<<" + K4_RECORD[:10], 25),
        (b">>planar_code<<" + bytes([4, 2, 3, 9, 0]), 18),
        (b">>planar_code<<" + bytes([4, 2, 3, 4, 0, 1, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0]), 15),
    )
    @ddt.unpack
    def test_malformed(self, data, offset):
        with self.assertRaises(PlanarCodeError) as context:
            list(read_planar_code(data))

        self.assertEqual(offset, context.exception.offset)
        self.assertIn(f"byte {offset}", str(context.exception))


class TestWritePlanarCode(TestCase):
    """
    Tests for write_planar_code.
    """

    def test_generated_classes_survive(self):
        graphs = list(gen_triangulations(8))
        read_back = list(read_planar_code(write_planar_code(graphs)))

        self.assertEqual(14, len(read_back))
        self.assertEqual({canonical_form(graph) for graph in graphs}, {canonical_form(graph) for graph in read_back})

    def test_embedding_written_verbatim(self):
        embedding = RotationEmbedding(rotation=[(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)])

        self.assertEqual(b">>planar_code<<" + K4_RECORD, write_planar_code([embedding]))

    def test_two_byte_records(self):
        data = write_planar_code([wheel(300)])

        self.assertTrue(data.startswith(b">>planar_code le<<"))
        self.assertEqual([wheel(300)], list(read_planar_code(data)))

    def test_non_planar_graph(self):
        with self.assertRaises(GraphPreconditionError):
            write_planar_code([complete(5)])
