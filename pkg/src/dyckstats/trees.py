"""Ordered rooted trees and their preorder correspondence with Dyck paths.

A tree is stored as its *shape*: a nested tuple where each vertex is the
tuple of its children's shapes.  Shapes are hashable and shape equality is
tree equality (vertices are unlabeled; identity is positional).  The preorder
walk maps each edge descended to an up step and each edge ascended to a down
step, so a tree with n edges serialises to a Dyck word of semilength n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    EmptyResidueSetError,
    InvalidMError,
    NonPositiveSizeError,
    NotPlantedError,
)
from .paths import DOWN, UP, DyckPath, Step

__all__ = [
    "OrderedTree",
    "PlantedTree",
    "EdgeRef",
    "path_to_tree",
    "tree_to_path",
    "exterior_edges",
    "edges_at_residue",
    "decompose_planted",
    "merge_planted",
    "make_bouquet",
    "make_chain",
    "is_bouquet",
]

Shape = tuple  # nested tuples of the same form


def _shape_edge_count(shape: Shape) -> int:
    count = 0
    stack = [shape]
    while stack:
        node = stack.pop()
        count += len(node)
        stack.extend(node)
    return count


def _shape_leaf_count(shape: Shape) -> int:
    count = 0
    stack = [shape]
    while stack:
        node = stack.pop()
        if node:
            stack.extend(node)
        else:
            count += 1
    return count


def _shape_height(shape: Shape) -> int:
    best = 0
    stack = [(shape, 0)]
    while stack:
        node, depth = stack.pop()
        if depth > best:
            best = depth
        for child in node:
            stack.append((child, depth + 1))
    return best


def _shape_is_chain(shape: Shape) -> bool:
    node = shape
    while node:
        if len(node) > 1:
            return False
        node = node[0]
    return True


def _chain_sub(k: int) -> Shape:
    shape: Shape = ()
    for _ in range(k):
        shape = (shape,)
    return shape


def _bouquet_shape(k: int) -> Shape:
    # Planted shape: the root's unique child carries k-1 pendant edges.
    return (((),) * (k - 1),)


def _shape_from_steps(steps: tuple[Step, ...]) -> Shape:
    stack: list[list] = [[]]
    for s in steps:
        if s is UP:
            stack.append([])
        else:
            done = tuple(stack.pop())
            stack[-1].append(done)
    return tuple(stack[0])


def _word_steps(shape: Shape) -> tuple[Step, ...]:
    out: list[Step] = []
    work: list[tuple[Shape, bool]] = [(c, True) for c in reversed(shape)]
    while work:
        node, opening = work.pop()
        if opening:
            out.append(UP)
            work.append((node, False))
            for child in reversed(node):
                work.append((child, True))
        else:
            out.append(DOWN)
    return tuple(out)


class OrderedTree:
    """An unlabeled rooted tree with significant child order."""

    __slots__ = ("_shape",)

    def __init__(self, children: Iterable["OrderedTree"] = ()):
        shape = tuple(c.shape for c in children)
        object.__setattr__(self, "_shape", shape)

    @classmethod
    def from_shape(cls, shape: Shape) -> "OrderedTree":
        tree = object.__new__(cls)
        object.__setattr__(tree, "_shape", shape)
        if cls is PlantedTree and len(shape) != 1:
            raise NotPlantedError(f"root has degree {len(shape)}, expected 1")
        return tree

    @property
    def shape(self) -> Shape:
        return self._shape

    @property
    def children(self) -> tuple["OrderedTree", ...]:
        return tuple(OrderedTree.from_shape(c) for c in self._shape)

    @property
    def edge_count(self) -> int:
        return _shape_edge_count(self._shape)

    @property
    def leaf_count(self) -> int:
        return _shape_leaf_count(self._shape)

    @property
    def height(self) -> int:
        return _shape_height(self._shape)

    @property
    def is_planted(self) -> bool:
        return len(self._shape) == 1

    def outline(self) -> str:
        """Debug rendering: one vertex per line, indented two spaces per level."""
        lines: list[str] = []

        def walk(node: Shape, depth: int) -> None:
            lines.append("  " * depth + "*")
            for child in node:
                walk(child, depth + 1)

        walk(self._shape, 0)
        return "\n".join(lines)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderedTree):
            return NotImplemented
        return self._shape == other._shape

    def __hash__(self) -> int:
        return hash(self._shape)

    def __repr__(self) -> str:
        return f"{type(self).__name__}.from_shape({self._shape!r})"


class PlantedTree(OrderedTree):
    """An ordered tree whose root has exactly one child (the planting stalk)."""

    __slots__ = ()

    def __init__(self, children: Iterable[OrderedTree] = ()):
        super().__init__(children)
        if len(self._shape) != 1:
            raise NotPlantedError(f"root has degree {len(self._shape)}, expected 1")

    @classmethod
    def plant(cls, tree: OrderedTree) -> "PlantedTree":
        """Hang the given tree below a new root edge."""
        return cls.from_shape((tree.shape,))


@dataclass(frozen=True)
class EdgeRef:
    """An edge identified by preorder vertex indices; level = depth of child."""

    parent: int
    child: int
    level: int

    @property
    def is_red(self) -> bool:
        return self.level % 3 == 0


def path_to_tree(path: DyckPath) -> OrderedTree:
    """Preorder bijection: up step = edge descended, down step = edge ascended."""
    return OrderedTree.from_shape(_shape_from_steps(path.steps))


def tree_to_path(tree: OrderedTree) -> DyckPath:
    """Inverse of path_to_tree."""
    return DyckPath._trusted(_word_steps(tree.shape))


def _edges(shape: Shape) -> Iterator[tuple[int, int, int, Shape]]:
    """Yield (parent_idx, child_idx, level, child_shape) in preorder."""
    counter = [0]

    def walk(node: Shape, index: int, depth: int) -> Iterator[tuple[int, int, int, Shape]]:
        for child in node:
            counter[0] += 1
            child_index = counter[0]
            yield (index, child_index, depth + 1, child)
            yield from walk(child, child_index, depth + 1)

    return walk(shape, 0, 0)


def exterior_edges(tree: OrderedTree) -> list[EdgeRef]:
    """Edges whose pendant subtree (edge plus descendants) has >= 2 leaves."""
    out = []
    for parent, child, level, child_shape in _edges(tree.shape):
        if _shape_leaf_count(child_shape) >= 2:
            out.append(EdgeRef(parent=parent, child=child, level=level))
    return out


def edges_at_residue(tree: OrderedTree, m: int, residues: Iterable[int]) -> int:
    """Count edges whose level mod m lies in the residue set."""
    if m < 2:
        raise InvalidMError(f"modulus must be >= 2, got {m}")
    r = frozenset(residues)
    if not r:
        raise EmptyResidueSetError("residue set is empty")
    if not r.issubset(range(m)):
        raise InvalidMError(f"residues {sorted(r)} not all in range(0, {m})")
    return sum(1 for _, _, level, _ in _edges(tree.shape) if level % m in r)


def decompose_planted(tree: OrderedTree) -> list[PlantedTree]:
    """Split at the root into planted components, in child order."""
    return [PlantedTree.from_shape((c,)) for c in tree.shape]


def merge_planted(parts: Iterable[PlantedTree]) -> OrderedTree:
    """Glue planted trees at their roots, preserving list order."""
    shapes = []
    for part in parts:
        if not part.is_planted:
            raise NotPlantedError("merge_planted needs planted components")
        shapes.append(part.shape[0])
    return OrderedTree.from_shape(tuple(shapes))


def make_bouquet(k: int) -> PlantedTree:
    """Planted tree with k edges: k-1 pendant edges under the root's child."""
    if k < 1:
        raise NonPositiveSizeError(f"bouquet size must be >= 1, got {k}")
    return PlantedTree.from_shape(_bouquet_shape(k))


def make_chain(k: int) -> PlantedTree:
    """Planted tree whose k edges form a single descending chain."""
    if k < 1:
        raise NonPositiveSizeError(f"chain length must be >= 1, got {k}")
    return PlantedTree.from_shape((_chain_sub(k - 1),))


def is_bouquet(tree: OrderedTree) -> bool:
    """True iff the tree is planted and all grandchildren of the root are leaves."""
    if not tree.is_planted:
        return False
    return all(child == () for child in tree.shape[0])
