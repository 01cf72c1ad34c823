"""Hotel-room occupancy view and its equivalence with the gap encoding.

An occupancy is a strictly increasing tuple of room labels (signed integers,
the hotel is bi-infinite).  Two adjacent occupants separating -- one to the
nearest free room on the left, the other to the nearest free room on the
right -- is the original formulation of a move; this module simulates it
directly so it can serve as an independent oracle for
:func:`gapfire.gap_core.apply_move`.
"""

from __future__ import annotations

from .gap_core import GapState, IllegalTriggerError, apply_move

RoomOccupancy = tuple[int, ...]


class NoAdjacentPairError(ValueError):
    """The named room and its right neighbor are not both occupied."""


def _validated(rooms: RoomOccupancy) -> RoomOccupancy:
    rooms = tuple(rooms)
    if not rooms:
        raise ValueError("occupancy must contain at least one room")
    if any(b <= a for a, b in zip(rooms, rooms[1:])):
        raise ValueError(f"rooms must be strictly increasing, got {rooms}")
    return rooms


def rooms_to_gaps(rooms: RoomOccupancy) -> GapState:
    """Gap state of an occupancy: empty-room counts between neighbors."""
    rooms = _validated(rooms)
    return tuple(b - a - 1 for a, b in zip(rooms, rooms[1:]))


def gaps_to_rooms(s: GapState, leftmost: int = 0) -> RoomOccupancy:
    """Occupancy realizing a gap state with its first occupant at ``leftmost``.

    Gap states forget translation, so a representative position must be
    chosen; ``rooms_to_gaps`` inverts this for any choice.
    """
    rooms = [leftmost]
    for a in s:
        rooms.append(rooms[-1] + a + 1)
    return tuple(rooms)


def simulate_room_move(rooms: RoomOccupancy, left_room: int) -> RoomOccupancy:
    """Separate the adjacent pair occupying ``left_room`` and ``left_room+1``.

    The left occupant relocates to the nearest free room below ``left_room``;
    the right occupant to the nearest free room above ``left_room + 1``.
    """
    occ = set(_validated(rooms))
    if left_room not in occ or left_room + 1 not in occ:
        raise NoAdjacentPairError(
            f"rooms {left_room} and {left_room + 1} are not both occupied"
        )
    dest_left = left_room - 1
    while dest_left in occ:
        dest_left -= 1
    dest_right = left_room + 2
    while dest_right in occ:
        dest_right += 1
    occ.discard(left_room)
    occ.discard(left_room + 1)
    occ.add(dest_left)
    occ.add(dest_right)
    return tuple(sorted(occ))


def check_move_equivalence(s: GapState, trigger: int) -> bool:
    """Cross-check one gap-level move against the room-level simulation.

    Realizes ``s`` with leftmost occupant at 0, separates the pair bounding
    the triggered zero gap, and compares the resulting gap state with
    ``apply_move(s, trigger)``.
    """
    if not 1 <= trigger <= len(s):
        raise ValueError(f"trigger {trigger} out of range for length {len(s)}")
    if s[trigger - 1] != 0:
        raise IllegalTriggerError(f"position {trigger} holds {s[trigger - 1]}, not 0")
    rooms = gaps_to_rooms(s, 0)
    moved = simulate_room_move(rooms, rooms[trigger - 1])
    return rooms_to_gaps(moved) == apply_move(s, trigger)


def parse_occupancy(text: str) -> RoomOccupancy:
    """Parse a comma-separated sorted room list, e.g. ``-1,0,3,4``."""
    return _validated(tuple(int(p.strip()) for p in text.strip().split(",")))


def format_occupancy(rooms: RoomOccupancy) -> str:
    return ",".join(str(r) for r in rooms)
