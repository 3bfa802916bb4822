GRAPH_F_LABEL_TO_ID = {
    'z': 0,
    'y': 1,
    'x': 2,
    'w': 3,
    'd': 4,
    'c': 5,
    'b': 6,
    'a': 7,
}
GRAPH_F_ID_TO_LABEL = {v: k for k, v in GRAPH_F_LABEL_TO_ID.items()}

# colour classes of the 3-colouring every schedule on F ends in
GRAPH_F_CLASSES = (
    ('a', 'x', 'c'),
    ('b', 'y', 'd'),
    ('w', 'z'),
)

PRISM_STAR_LABEL_TO_ID = {
    'v1': 0,
    'v2': 1,
    'v3': 2,
    'x1': 3,
    'y1': 4,
    'z1': 5,
    'y2': 6,
    'z2': 7,
    'x2': 8,
}
PRISM_STAR_ID_TO_LABEL = {v: k for k, v in PRISM_STAR_LABEL_TO_ID.items()}

PRISM_STAR_CLASSES = (
    ('v1', 'z1', 'z2'),
    ('v2', 'x1', 'x2'),
    ('v3', 'y1', 'y2'),
)


def class_ids(classes: tuple[tuple[str, ...], ...], label_to_id: dict[str, int]) -> list[list[int]]:
    return [sorted(label_to_id[label] for label in labels) for labels in classes]
