"""Transactional datasets: representation, ``.dat`` I/O and support counting.

A ``.dat`` file holds one transaction per line as whitespace-separated
non-negative integer item ids (the FIMI convention). An optional sidecar
``<name>.items`` file maps ``id<TAB>label``.
"""
from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence, TextIO

import numpy as np

Itemset = tuple  # sorted tuple of distinct non-negative ints


class DatasetFormatError(ValueError):
    """Raised when a transaction file cannot be parsed."""


def as_itemset(items: Iterable[int]) -> tuple[int, ...]:
    """Canonical itemset: sorted tuple without duplicates."""
    out = tuple(sorted({int(i) for i in items}))
    if out and out[0] < 0:
        raise ValueError(f"item ids must be non-negative, got {out[0]}")
    return out


@dataclass(frozen=True, eq=False)
class Dataset:
    """An ordered, immutable list of transactions.

    Parameters
    ----------
    transactions : sequence of iterables of int
        Each transaction is canonicalized to a sorted tuple of distinct ids.
    name : str, optional
    labels : mapping int -> str, optional
        Item dictionary; must be injective.
    """

    transactions: tuple[tuple[int, ...], ...]
    name: str = ""
    labels: Mapping[int, str] | None = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "transactions", tuple(as_itemset(t) for t in self.transactions)
        )
        if self.labels is not None:
            labels = dict(self.labels)
            if len(set(labels.values())) != len(labels):
                raise ValueError("item label dictionary is not injective")
            object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.transactions)

    def __iter__(self):
        return iter(self.transactions)

    def __getitem__(self, i):
        return self.transactions[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return self.transactions == other.transactions

    def __hash__(self) -> int:
        return hash(self.transactions)

    @cached_property
    def alphabet(self) -> tuple[int, ...]:
        items: set[int] = set()
        for t in self.transactions:
            items.update(t)
        return tuple(sorted(items))

    @cached_property
    def tidsets(self) -> dict[int, int]:
        """Vertical layout: item -> bitmask of transaction indices."""
        tids: dict[int, int] = {}
        for tid, t in enumerate(self.transactions):
            bit = 1 << tid
            for i in t:
                tids[i] = tids.get(i, 0) | bit
        return tids

    @cached_property
    def item_supports(self) -> dict[int, int]:
        return {i: tids.bit_count() for i, tids in self.tidsets.items()}

    @property
    def lengths(self) -> np.ndarray:
        return np.fromiter((len(t) for t in self.transactions), dtype=np.int64,
                           count=len(self.transactions))

    def tidset(self, x: Iterable[int]) -> int:
        """Bitmask of the transactions containing every item of ``x``."""
        mask = (1 << len(self.transactions)) - 1
        tids = self.tidsets
        for i in x:
            mask &= tids.get(i, 0)
            if not mask:
                break
        return mask

    def to_binary_matrix(self, columns: Sequence[int] | None = None) -> np.ndarray:
        """Dense 0/1 matrix of shape (n_transactions, n_items)."""
        cols = self.alphabet if columns is None else tuple(columns)
        index = {item: j for j, item in enumerate(cols)}
        out = np.zeros((len(self.transactions), len(cols)), dtype=np.uint8)
        for r, t in enumerate(self.transactions):
            for i in t:
                j = index.get(i)
                if j is not None:
                    out[r, j] = 1
        return out


def support(d: Dataset, x: Iterable[int]) -> int:
    """Number of transactions of ``d`` that contain every item of ``x``."""
    return d.tidset(x).bit_count()


def _parse_lines(lines: list[str], allow_empty: bool) -> list[tuple[int, ...]]:
    # without allow_empty, blank lines after the last transaction are padding
    while not allow_empty and lines and not lines[-1].strip():
        lines = lines[:-1]
    transactions = []
    for lineno, line in enumerate(lines, start=1):
        tokens = line.split()
        if not tokens:
            if not allow_empty:
                raise DatasetFormatError(
                    f"line {lineno}: empty transaction (pass allow_empty to keep it)")
            transactions.append(())
            continue
        try:
            ids = [int(tok) for tok in tokens]
        except ValueError:
            bad = next(tok for tok in tokens if not tok.lstrip("-").isdigit())
            raise DatasetFormatError(
                f"line {lineno}: non-integer token {bad!r}") from None
        if min(ids) < 0:
            raise DatasetFormatError(f"line {lineno}: negative item id {min(ids)}")
        transactions.append(as_itemset(ids))
    return transactions


def load_dataset(source, *, allow_empty: bool = False, name: str | None = None,
                 labels: Mapping[int, str] | None = None) -> Dataset:
    """Read a ``.dat`` transaction file.

    ``source`` is a path or a text stream. A blank line is an empty
    transaction, which is an error unless ``allow_empty`` is set; without it,
    blank lines at the end of the file are ignored.
    """
    if isinstance(source, (str, os.PathLike)):
        path = os.fspath(source)
        with open(path, encoding="utf-8", newline="") as fh:
            text = fh.read()
        if name is None:
            name = os.path.splitext(os.path.basename(path))[0]
        if labels is None:
            sidecar = os.path.splitext(path)[0] + ".items"
            if os.path.exists(sidecar):
                labels = load_item_labels(sidecar)
    else:
        text = source.read()
    transactions = _parse_lines(text.splitlines(), allow_empty)
    if not transactions:
        raise DatasetFormatError("empty dataset")
    return Dataset(transactions, name=name or "", labels=labels)


def loads_dataset(text: str, **kwargs) -> Dataset:
    return load_dataset(io.StringIO(text), **kwargs)


def save_dataset(d: Dataset, sink, *, allow_empty: bool = False) -> None:
    """Write ``d`` in ``.dat`` format with LF line endings."""
    if not allow_empty and any(len(t) == 0 for t in d.transactions):
        raise ValueError("dataset contains an empty transaction; pass allow_empty=True")
    text = "".join(" ".join(map(str, t)) + "\n" for t in d.transactions)
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sink.write(text)


def dumps_dataset(d: Dataset, **kwargs) -> str:
    buf = io.StringIO()
    save_dataset(d, buf, **kwargs)
    return buf.getvalue()


def load_item_labels(source) -> dict[int, str]:
    """Read an ``id<TAB>label`` dictionary file."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    else:
        lines = source.read().splitlines()
    labels: dict[int, str] = {}
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        key, sep, label = line.partition("\t")
        if not sep:
            raise DatasetFormatError(f"line {lineno}: expected id<TAB>label")
        try:
            labels[int(key)] = label
        except ValueError:
            raise DatasetFormatError(f"line {lineno}: bad item id {key!r}") from None
    if len(set(labels.values())) != len(labels):
        raise DatasetFormatError("item label dictionary is not injective")
    return labels


def save_item_labels(labels: Mapping[int, str], sink: TextIO) -> None:
    for k in sorted(labels):
        sink.write(f"{k}\t{labels[k]}\n")
