import pytest

from graphdegen.graphs import Graph, complete_graph, cycle_graph
from graphdegen.rotation import RotationError, RotationSystem, faces

K4_PLANAR = [[1, 3, 2], [2, 3, 0], [0, 3, 1], [2, 0, 1]]

CUBE = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0),
                            (4, 5), (5, 6), (6, 7), (7, 4),
                            (0, 4), (1, 5), (2, 6), (3, 7)])
CUBE_ROT = [[1, 4, 3], [2, 5, 0], [3, 6, 1], [0, 7, 2],
            [0, 5, 7], [1, 6, 4], [2, 7, 5], [3, 4, 6]]


def test_faces_k4():
    fs = faces(complete_graph(4), RotationSystem.from_lists(complete_graph(4), K4_PLANAR))
    assert sorted(len(f) for f in fs) == [3, 3, 3, 3]


def test_faces_c5():
    c5 = cycle_graph(5)
    rot = RotationSystem.from_lists(c5, [[(v + 1) % 5, (v - 1) % 5] for v in range(5)])
    fs = faces(c5, rot)
    assert sorted(len(f) for f in fs) == [5, 5]


def test_faces_cube():
    fs = faces(CUBE, RotationSystem.from_lists(CUBE, CUBE_ROT))
    assert sorted(len(f) for f in fs) == [4] * 6


def test_faces_cover_every_dart():
    fs = faces(CUBE, RotationSystem.from_lists(CUBE, CUBE_ROT))
    assert sum(len(f) for f in fs) == 2 * CUBE.m


def test_rotation_validation():
    with pytest.raises(RotationError):
        RotationSystem.from_lists(complete_graph(3), [[1, 2], [0], [0, 1]])
    with pytest.raises(RotationError):
        RotationSystem.from_lists(complete_graph(3), [[1, 2], [0, 2]])


def test_euler_rejects_nonplanar_rotation():
    # sorted neighbor lists wrap K4 on a torus: face count breaks Euler
    rot = RotationSystem.from_lists(
        complete_graph(4), [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]])
    with pytest.raises(RotationError):
        faces(complete_graph(4), rot)


def test_rotation_text_round_trip():
    rot = RotationSystem.from_lists(complete_graph(4), K4_PLANAR)
    text = rot.to_text()
    rot2 = RotationSystem.from_text(complete_graph(4), text)
    assert rot2.to_text() == text
    assert rot2 == rot
