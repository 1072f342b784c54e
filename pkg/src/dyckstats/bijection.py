"""A recursive regrafting bijection on planted trees and its lifts.

``regraft`` rearranges a planted tree so that the number of edges at depth
divisible by 3 in the output equals the number of exterior edges (edges whose
pendant subtree has at least two leaves) in the input.  The base case sends a
bare chain to a bouquet of the same size.  Otherwise, with v the root's child
and w_1..w_r its children in order, one of three surgeries applies:

* last child edge exterior: regraft every component, take the image of the
  last one as host, append a fresh vertex y right of the host's rightmost
  depth-3 vertex, and hang the remaining images under y;
* last component a chain (length t) but the second-to-last exterior: take the
  image of the second-to-last as host, append below its depth-1 vertex q a
  fresh length-2 chain q-x-y followed by t-1 pendant edges, and hang the
  remaining images under y;
* last two components chains (lengths t1, t2): build a fresh length-3 chain
  root-q-x-y, give q t1-1 pendant edges left of x and t2-1 right of x, and
  hang the remaining images under y.

Each surgery consumes the planting stalk and emits exactly one new edge at
depth 3 as the rightmost one, which is what makes the map invertible:
``regraft_inverse`` locates the rightmost depth-3 edge x-y and undoes the
unique surgery that could have produced it.  The lifts ``regraft_tree`` (act
on each planted component of an ordered tree) and ``regraft_path`` (conjugate
by the preorder tree correspondence) inherit bijectivity; on paths the
exterior-pair count of the input becomes the number of up steps at height
divisible by 3 in the output.
"""

from __future__ import annotations

from enum import Enum

from .errors import NotInImageError, NotPlantedError
from .paths import DyckPath
from .trees import (
    OrderedTree,
    PlantedTree,
    Shape,
    _bouquet_shape,
    _chain_sub,
    _shape_edge_count,
    _shape_is_chain,
    _shape_leaf_count,
    path_to_tree,
    tree_to_path,
)

__all__ = [
    "RegraftCase",
    "regraft",
    "regraft_inverse",
    "regraft_case",
    "regraft_inverse_case",
    "regraft_tree",
    "regraft_tree_inverse",
    "regraft_path",
    "regraft_path_inverse",
]


class RegraftCase(Enum):
    """Which construction step applies to a planted tree."""

    CHAIN = "chain"
    LAST_EXTERIOR = "last-exterior"
    PREV_EXTERIOR = "prev-exterior"
    TAIL_CHAINS = "tail-chains"


Trace = list  # entries (depth, RegraftCase)


def _case_of(shape: Shape) -> RegraftCase:
    if _shape_is_chain(shape):
        return RegraftCase.CHAIN
    v = shape[0]
    if _shape_leaf_count(v[-1]) >= 2:
        return RegraftCase.LAST_EXTERIOR
    if len(v) >= 2 and _shape_leaf_count(v[-2]) >= 2:
        return RegraftCase.PREV_EXTERIOR
    # A lone non-exterior component would make the whole tree a chain, so two
    # trailing chain components really exist here.
    assert len(v) >= 2
    return RegraftCase.TAIL_CHAINS


def _inverse_case_of(shape: Shape) -> RegraftCase:
    q = shape[0]
    if not any(q):
        return RegraftCase.CHAIN  # no depth-3 edge: the tree is a bouquet
    ix = max(i for i, c in enumerate(q) if c)
    if len(q[ix]) >= 2:
        return RegraftCase.LAST_EXTERIOR
    if any(q[:ix]):
        return RegraftCase.PREV_EXTERIOR
    return RegraftCase.TAIL_CHAINS


def _regraft(shape: Shape, trace: Trace | None, depth: int) -> Shape:
    case = _case_of(shape)
    if trace is not None:
        trace.append((depth, case))
    if case is RegraftCase.CHAIN:
        return _bouquet_shape(_shape_edge_count(shape))
    v = shape[0]
    if case is RegraftCase.LAST_EXTERIOR:
        images = [_regraft((w,), trace, depth + 1) for w in v]
        host = images[-1]
        hung = tuple(img[0] for img in images[:-1])
        q = host[0]
        # The host has an exterior edge, hence a depth-3 edge; append the new
        # vertex immediately right of the rightmost one.
        ix = max(i for i, c in enumerate(q) if c)
        x_new = q[ix] + (hung,)
        return (q[:ix] + (x_new,) + q[ix + 1 :],)
    if case is RegraftCase.PREV_EXTERIOR:
        t = _shape_edge_count((v[-1],))
        images = [_regraft((w,), trace, depth + 1) for w in v[:-1]]
        host = images[-1]
        hung = tuple(img[0] for img in images[:-1])
        return (host[0] + ((hung,),) + ((),) * (t - 1),)
    t1 = _shape_edge_count((v[-2],))
    t2 = _shape_edge_count((v[-1],))
    images = [_regraft((w,), trace, depth + 1) for w in v[:-2]]
    hung = tuple(img[0] for img in images)
    return (((),) * (t1 - 1) + ((hung,),) + ((),) * (t2 - 1),)


def _regraft_inverse(shape: Shape, trace: Trace | None, depth: int) -> Shape:
    case = _inverse_case_of(shape)
    if trace is not None:
        trace.append((depth, case))
    if case is RegraftCase.CHAIN:
        return (_chain_sub(_shape_edge_count(shape) - 1),)
    q = shape[0]
    ix = max(i for i, c in enumerate(q) if c)
    x_sub = q[ix]
    y_sub = x_sub[-1]
    parts = [_regraft_inverse((w,), trace, depth + 1) for w in y_sub]
    if case is RegraftCase.LAST_EXTERIOR:
        rest = (q[:ix] + (x_sub[:-1],) + q[ix + 1 :],)
        parts.append(_regraft_inverse(rest, trace, depth + 1))
    elif case is RegraftCase.PREV_EXTERIOR:
        parts.append(_regraft_inverse((q[:ix],), trace, depth + 1))
        parts.append((_chain_sub(len(q) - ix - 1),))
    else:
        parts.append((_chain_sub(ix),))
        parts.append((_chain_sub(len(q) - ix - 1),))
    return (tuple(p[0] for p in parts),)


def _planted_shape(tree: OrderedTree) -> Shape:
    if not tree.is_planted:
        raise NotPlantedError(f"root has degree {len(tree.shape)}, expected 1")
    return tree.shape


def regraft(tree: OrderedTree, trace: Trace | None = None) -> PlantedTree:
    """Map a planted tree to one with as many depth-divisible-by-3 edges as
    the input had exterior edges."""
    shape = _planted_shape(tree)
    image = _regraft(shape, trace, 0)
    if _shape_edge_count(image) != _shape_edge_count(shape):
        raise NotInImageError("regraft did not preserve the edge count")
    return PlantedTree.from_shape(image)


def regraft_inverse(tree: OrderedTree, trace: Trace | None = None) -> PlantedTree:
    """Inverse of regraft."""
    shape = _planted_shape(tree)
    image = _regraft_inverse(shape, trace, 0)
    if _shape_edge_count(image) != _shape_edge_count(shape):
        raise NotInImageError("regraft_inverse did not preserve the edge count")
    return PlantedTree.from_shape(image)


def regraft_case(tree: OrderedTree) -> RegraftCase:
    """Top-level case the forward construction would take."""
    return _case_of(_planted_shape(tree))


def regraft_inverse_case(tree: OrderedTree) -> RegraftCase:
    """Top-level case the inverse analysis selects (mirrors regraft_case)."""
    return _inverse_case_of(_planted_shape(tree))


def regraft_tree(tree: OrderedTree, trace: Trace | None = None) -> OrderedTree:
    """Apply regraft to every planted component of an ordered tree."""
    shapes = tuple(_regraft((c,), trace, 0)[0] for c in tree.shape)
    return OrderedTree.from_shape(shapes)


def regraft_tree_inverse(tree: OrderedTree, trace: Trace | None = None) -> OrderedTree:
    shapes = tuple(_regraft_inverse((c,), trace, 0)[0] for c in tree.shape)
    return OrderedTree.from_shape(shapes)


def regraft_path(path: DyckPath, trace: Trace | None = None) -> DyckPath:
    """Length-preserving path bijection carrying the exterior-pair count to
    the count of up steps at height divisible by 3."""
    return tree_to_path(regraft_tree(path_to_tree(path), trace))


def regraft_path_inverse(path: DyckPath, trace: Trace | None = None) -> DyckPath:
    return tree_to_path(regraft_tree_inverse(path_to_tree(path), trace))
