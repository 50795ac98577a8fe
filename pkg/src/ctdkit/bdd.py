"""Reduced ordered binary decision diagrams.

A `BDD` manager owns a shared DAG of nodes over a fixed number of Boolean
variables, ordered by their integer index (terminals order last).  Nodes
live in an append-only store and are hash-consed through a unique table,
so two semantically equal functions built in the same manager always have
the same rootid.  `Function` is a thin handle (manager, root) with the
usual operator overloads.

Everything reduces to the ternary `ite` (if-then-else), which recurses on
the lowest-ordered variable present in its operands and is memoized in an
unbounded per-manager cache.  Negation is `ite(f, false, true)`; there are
no complemented edges.

A manager and its handles are confined to one thread of control at a time;
distinct managers are independent.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import BddError

# terminal root ids, shared by every manager
FALSE = 0
TRUE = 1


class BDD:
    """Shared ROBDD store over variables 0 .. var_count-1."""

    def __init__(self, var_count: int):
        if var_count < 0:
            raise BddError(f"variable count must be >= 0, got {var_count}")
        self.var_count = var_count
        # node store: root id -> (var, low, high); ids 0/1 are the terminals,
        # kept at pseudo-level `var_count` so every edge goes strictly down
        self._nodes: list[tuple[int, int, int]] = [
            (var_count, FALSE, FALSE),
            (var_count, TRUE, TRUE),
        ]
        self._unique: dict[tuple[int, int, int], int] = {}
        self._cache: dict[tuple, int] = {}
        # per-node satisfying-assignment weights (append-only store keeps it valid)
        self._counts: dict[int, int] = {}

    # ------------------------------------------------------------------
    # construction

    @property
    def false(self) -> "Function":
        return Function(self, FALSE)

    @property
    def true(self) -> "Function":
        return Function(self, TRUE)

    def const(self, value: bool) -> "Function":
        return self.true if value else self.false

    def var(self, index: int) -> "Function":
        """Projection onto variable `index`."""
        self._check_var(index)
        return Function(self, self._node(index, FALSE, TRUE))

    def _check_var(self, index: int) -> None:
        if not 0 <= index < self.var_count:
            raise BddError(
                f"variable index {index} out of range (manager has {self.var_count})")

    def _node(self, var: int, low: int, high: int) -> int:
        if low == high:
            return low
        key = (var, low, high)
        found = self._unique.get(key)
        if found is not None:
            return found
        root = len(self._nodes)
        self._nodes.append(key)
        self._unique[key] = root
        return root

    def _var_of(self, root: int) -> int:
        return self._nodes[root][0]

    # ------------------------------------------------------------------
    # ite and friends

    def ite(self, f: "Function", g: "Function", h: "Function") -> "Function":
        self._check_same_manager(f, g, h)
        return Function(self, self._ite(f.root, g.root, h.root))

    def _ite(self, f: int, g: int, h: int) -> int:
        if f == TRUE:
            return g
        if f == FALSE:
            return h
        if g == h:
            return g
        if g == TRUE and h == FALSE:
            return f
        key = (f, g, h)
        found = self._cache.get(key)
        if found is not None:
            return found
        v = min(self._var_of(f), self._var_of(g), self._var_of(h))
        result = self._node(
            v,
            self._ite(self._low(f, v), self._low(g, v), self._low(h, v)),
            self._ite(self._high(f, v), self._high(g, v), self._high(h, v)),
        )
        self._cache[key] = result
        return result

    def _low(self, root: int, v: int) -> int:
        var, low, _ = self._nodes[root]
        return low if var == v else root

    def _high(self, root: int, v: int) -> int:
        var, _, high = self._nodes[root]
        return high if var == v else root

    def _check_same_manager(self, *fns: "Function") -> None:
        for fn in fns:
            if fn.manager is not self:
                raise BddError("operands were built by different managers")

    # ------------------------------------------------------------------
    # cofactors and quantification

    def restrict(self, f: "Function", var: int, value: bool) -> "Function":
        """Cofactor of f with `var` fixed to `value`."""
        self._check_same_manager(f)
        self._check_var(var)
        return Function(self, self._restrict(f.root, var, bool(value)))

    def _restrict(self, root: int, var: int, value: bool) -> int:
        v = self._var_of(root)
        if v > var:
            return root
        key = ("restrict", root, var, value)
        found = self._cache.get(key)
        if found is not None:
            return found
        node_var, low, high = self._nodes[root]
        if node_var == var:
            result = high if value else low
        else:
            result = self._node(
                node_var,
                self._restrict(low, var, value),
                self._restrict(high, var, value),
            )
        self._cache[key] = result
        return result

    def exists(self, f: "Function", variables: Iterable[int]) -> "Function":
        """Existential quantification over `variables`."""
        self._check_same_manager(f)
        vs = tuple(sorted(set(variables)))
        for v in vs:
            self._check_var(v)
        if not vs:
            return f
        return Function(self, self._exists(f.root, vs))

    def _exists(self, root: int, vs: tuple[int, ...]) -> int:
        if not vs or self._var_of(root) > vs[-1]:
            return root
        key = ("exists", root, vs)
        found = self._cache.get(key)
        if found is not None:
            return found
        node_var, low, high = self._nodes[root]
        below = tuple(x for x in vs if x > node_var)
        if node_var in vs:
            result = self._or(self._exists(low, below), self._exists(high, below))
        else:
            result = self._node(node_var,
                                self._exists(low, below),
                                self._exists(high, below))
        self._cache[key] = result
        return result

    def _or(self, f: int, g: int) -> int:
        return self._ite(f, TRUE, g)

    # ------------------------------------------------------------------
    # evaluation, counting, enumeration

    def evaluate(self, f: "Function", assignment) -> bool:
        """Follow edges per `assignment` until a terminal is reached.

        `assignment` maps variable index to a truthy/falsy value (a mapping
        or a sequence).  Variables skipped by the DAG need no value.
        """
        self._check_same_manager(f)
        root = f.root
        while root > TRUE:
            var, low, high = self._nodes[root]
            root = high if self._lookup(assignment, var) else low
        return root == TRUE

    @staticmethod
    def _lookup(assignment, var: int) -> bool:
        try:
            return bool(assignment[var])
        except (KeyError, IndexError):
            raise BddError(f"assignment is missing a value for variable {var}") from None

    def count(self, f: "Function", nvars: int | None = None) -> int:
        """Number of satisfying assignments over a 2**nvars space."""
        self._check_same_manager(f)
        n = self._check_nvars(f, nvars)
        # weight(u) counts assignments of vars var(u)..var_count-1
        total = (1 << self._var_of(f.root)) * self._weight(f.root)
        return total >> (self.var_count - n)

    def _check_nvars(self, f: "Function", nvars: int | None) -> int:
        top = self.support(f)
        needed = max(top) + 1 if top else 0
        if nvars is None:
            return self.var_count
        if nvars < needed:
            raise BddError(
                f"function mentions variable {needed - 1}, nvars={nvars} is too small")
        if nvars > self.var_count:
            raise BddError(f"nvars={nvars} exceeds manager variable count")
        return nvars

    def _weight(self, root: int) -> int:
        if root == FALSE:
            return 0
        if root == TRUE:
            return 1
        found = self._counts.get(root)
        if found is not None:
            return found
        var, low, high = self._nodes[root]
        w = ((1 << (self._var_of(low) - var - 1)) * self._weight(low)
             + (1 << (self._var_of(high) - var - 1)) * self._weight(high))
        self._counts[root] = w
        return w

    def satisfying(self, f: "Function", nvars: int | None = None) -> Iterator[tuple[int, ...]]:
        """Yield satisfying assignments as 0/1 tuples, lexicographically."""
        self._check_same_manager(f)
        n = self._check_nvars(f, nvars)
        yield from self._enumerate(f.root, 0, n, [])

    def _enumerate(self, root: int, level: int, n: int, prefix: list[int]):
        if root == FALSE:
            return
        if level == n:
            yield tuple(prefix)
            return
        var, low, high = self._nodes[root]
        if root == TRUE or var > level:
            branches = ((0, root), (1, root))
        else:
            branches = ((0, low), (1, high))
        for bit, child in branches:
            prefix.append(bit)
            yield from self._enumerate(child, level + 1, n, prefix)
            prefix.pop()

    def pick(self, f: "Function", nvars: int | None = None) -> tuple[int, ...] | None:
        """First satisfying assignment in enumeration order, or None."""
        return next(self.satisfying(f, nvars), None)

    def support(self, f: "Function") -> set[int]:
        """Variables the DAG of f actually mentions."""
        self._check_same_manager(f)
        seen: set[int] = set()
        todo = [f.root]
        visited: set[int] = set()
        while todo:
            root = todo.pop()
            if root <= TRUE or root in visited:
                continue
            visited.add(root)
            var, low, high = self._nodes[root]
            seen.add(var)
            todo.append(low)
            todo.append(high)
        return seen

    def __len__(self) -> int:
        return len(self._nodes)

    # ------------------------------------------------------------------
    # debug export

    def dump(self, f: "Function") -> str:
        """Adjacency listing of f's DAG: one `id var low high` line per node."""
        self._check_same_manager(f)
        lines = []
        visited: set[int] = set()
        todo = [f.root]
        while todo:
            root = todo.pop()
            if root in visited:
                continue
            visited.add(root)
            if root <= TRUE:
                lines.append(f"{root} const {root}")
                continue
            var, low, high = self._nodes[root]
            lines.append(f"{root} x{var} {low} {high}")
            todo.extend((low, high))
        lines.sort(key=lambda s: int(s.split()[0]))
        return "\n".join(lines)


class Function:
    """Handle to one Boolean function inside a manager."""

    __slots__ = ("manager", "root")

    def __init__(self, manager: BDD, root: int):
        self.manager = manager
        self.root = root

    # identity of roots is semantic equality within one manager
    def __eq__(self, other) -> bool:
        return (isinstance(other, Function)
                and self.manager is other.manager
                and self.root == other.root)

    def __hash__(self) -> int:
        return hash((id(self.manager), self.root))

    def __repr__(self) -> str:
        return f"Function(root={self.root})"

    @property
    def is_false(self) -> bool:
        return self.root == FALSE

    @property
    def is_true(self) -> bool:
        return self.root == TRUE

    def __invert__(self) -> "Function":
        return self.manager.ite(self, self.manager.false, self.manager.true)

    def __and__(self, other: "Function") -> "Function":
        return self.manager.ite(self, other, self.manager.false)

    def __or__(self, other: "Function") -> "Function":
        return self.manager.ite(self, self.manager.true, other)

    def implies(self, other: "Function") -> "Function":
        return self.manager.ite(self, other, self.manager.true)

    def iff(self, other: "Function") -> "Function":
        return self.manager.ite(self, other, ~other)

    def restrict(self, var: int, value: bool) -> "Function":
        return self.manager.restrict(self, var, value)

    def exists(self, variables: Iterable[int]) -> "Function":
        return self.manager.exists(self, variables)

    def evaluate(self, assignment) -> bool:
        return self.manager.evaluate(self, assignment)

    def count(self, nvars: int | None = None) -> int:
        return self.manager.count(self, nvars)

    def satisfying(self, nvars: int | None = None) -> Iterator[tuple[int, ...]]:
        return self.manager.satisfying(self, nvars)

    def pick(self, nvars: int | None = None) -> tuple[int, ...] | None:
        return self.manager.pick(self, nvars)

    def support(self) -> set[int]:
        return self.manager.support(self)

    def dump(self) -> str:
        return self.manager.dump(self)
