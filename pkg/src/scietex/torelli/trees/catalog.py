"""
On-disk catalogs of enumerated trees.

A catalog file ``trees-<parts>-v<version>.json`` in the cache directory holds the canonical
trees of one partition. Files written by another package version are ignored and rewritten.
"""

import json
from logging import Logger, getLogger
from pathlib import Path

from ..config import ComputeConfigModel, resolve_config
from ..version import __version__
from .colored_tree import ColoredTree, Partition, tree_from_dict, tree_to_dict
from .encoding import encoding_text
from .enumeration import enumerate_trees


def catalog_path(mu: Partition, cache_dir: Path) -> Path:
    """Catalog file of a partition."""
    parts = "_".join(str(p) for p in mu.parts)
    return cache_dir / f"trees-{parts}-v{__version__}.json"


def load_catalog(path: Path, logger: Logger | None = None) -> list[ColoredTree] | None:
    """Trees stored in a catalog file, None if it is missing, unreadable or outdated."""
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    if not path.is_file():
        return None
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        logger.warning("Ignoring unreadable catalog %s: %s", path, exc)
        return None
    if data.get("version") != __version__:
        logger.info("Catalog %s has version %s, rebuilding", path, data.get("version"))
        return None
    trees = [tree_from_dict(item) for item in data.get("trees", [])]
    logger.info("Loaded %d trees from %s", len(trees), path)
    return trees


def save_catalog(
    path: Path, mu: Partition, trees: list[ColoredTree], logger: Logger | None = None
) -> None:
    """Write a catalog file, creating the cache directory if needed."""
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    data = {
        "version": __version__,
        "partition": list(mu.parts),
        "trees": [tree_to_dict(t, encoding_text(t)) for t in trees],
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, separators=(",", ":")) + "\n", encoding="utf-8")
    logger.info("Saved %d trees to %s", len(trees), path)


def cached_trees(
    mu: Partition,
    config: ComputeConfigModel | None = None,
    logger: Logger | None = None,
) -> list[ColoredTree]:
    """
    `enumerate_trees` backed by the catalog cache of the config, when one is set.

    Args:
        mu (Partition): The partition.
        config (ComputeConfigModel | None): Supplies the cache directory and worker count.
        logger (Logger | None): Logger for cache events.

    Returns:
        list[ColoredTree]: Canonical trees in enumeration order.
    """
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    cfg = resolve_config(config)
    if cfg.cache_dir is None:
        return enumerate_trees(mu, config=cfg, logger=logger)
    path = catalog_path(mu, cfg.cache_dir)
    trees = load_catalog(path, logger)
    if trees is None:
        trees = enumerate_trees(mu, config=cfg, logger=logger)
        save_catalog(path, mu, trees, logger)
    return trees
