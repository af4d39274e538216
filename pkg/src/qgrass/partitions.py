"""Partitions, rim-hook surgery on Young diagrams, and rectangle duality."""

from __future__ import annotations

from dataclasses import dataclass


class Partition:
    """Weakly decreasing nonnegative parts; trailing zeros normalized away."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, *_):
        raise AttributeError("Partition is immutable")

    @property
    def size(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    def padded(self, rows):
        if len(self.parts) > rows:
            raise ValueError(f"{self} has more than {rows} rows")
        return self.parts + (0,) * (rows - len(self.parts))

    def contains(self, other):
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self.parts, other.parts))

    def fits(self, rows, cols):
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= cols)


EMPTY = Partition()


@dataclass(frozen=True)
class RimHookOutcome:
    """Result of an n-box rim walk: a hook, an illegal rim, or too few boxes."""

    kind: str  # "hook", "illegal-rim" or "no-rim"
    remainder: Partition | None = None
    height: int = 0


def remove_n_rim(rho, n, start_row):
    """Walk n boxes along the rim from the end of ``start_row`` (1-based).

    From the last box of the row the walk moves down whenever the row below
    reaches the current column, otherwise left, visiting the border boxes in
    their unique NE-to-SW order.  Outcomes are exhaustive and exclusive:

    * fewer than n boxes reachable: ``no-rim``;
    * the final box sits directly above the last box of the next row, so
      removal would not leave a partition: ``illegal-rim``;
    * otherwise the walked boxes form an n-rim hook whose ``height`` is the
      number of rows it occupies, and ``remainder`` is what is left.
    """
    if n < 1:
        raise ValueError("rim length must be positive")
    parts = rho.parts
    if not 1 <= start_row <= len(parts) or parts[start_row - 1] == 0:
        raise ValueError(f"start_row {start_row} does not index a nonempty row")
    row, col = start_row - 1, parts[start_row - 1]  # 0-based row, 1-based column
    for _ in range(n - 1):
        if row + 1 < len(parts) and parts[row + 1] >= col:
            row += 1
        elif col > 1:
            col -= 1
        else:
            return RimHookOutcome("no-rim")
    below = parts[row + 1] if row + 1 < len(parts) else 0
    if col <= below:
        return RimHookOutcome("illegal-rim")
    new = list(parts)
    for a in range(start_row - 1, row):
        new[a] = parts[a + 1] - 1
    new[row] = col - 1
    remainder = Partition(new)
    assert remainder.size == rho.size - n
    return RimHookOutcome("hook", remainder, row - (start_row - 1) + 1)


def dual_partition(mu, r, n):
    """Complement of mu in the r x (n-r) rectangle; an involution."""
    cols = n - r
    if not mu.fits(r, cols):
        raise ValueError(f"{mu} does not fit in the {r}x{cols} rectangle")
    padded = mu.padded(r)
    return Partition(cols - padded[r - 1 - i] for i in range(r))


def partitions_in_rectangle(rows, cols):
    """All partitions fitting the rectangle, ordered by (size, parts)."""
    out = [EMPTY]
    stack = [(EMPTY.parts, cols)]
    while stack:
        parts, cap = stack.pop()
        if len(parts) == rows:
            continue
        for p in range(1, cap + 1):
            new = parts + (p,)
            out.append(Partition(new))
            stack.append((new, p))
    out.sort(key=lambda p: (p.size, p.parts))
    return out


def partitions_with_rows(total, max_rows):
    """Partitions of ``total`` with at most ``max_rows`` rows."""
    if total == 0:
        return [EMPTY]
    out = []

    def grow(prefix, remaining, cap):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == max_rows:
            return
        for p in range(min(cap, remaining), 0, -1):
            grow(prefix + (p,), remaining - p, p)

    grow((), total, total)
    return out


def parse_partition(text):
    """Comma-separated parts; the empty partition is spelled '' or '0'."""
    text = text.strip()
    if text in ("", "0"):
        return EMPTY
    try:
        parts = [int(chunk) for chunk in text.split(",")]
    except ValueError:
        raise ValueError(f"not a partition: {text!r}") from None
    return Partition(parts)


def format_partition(p):
    return ",".join(str(x) for x in p.parts)
