"""
Config command handlers for collineate.
"""

from argparse import Namespace

import yaml

from collineate.cli.output import EXIT_INPUT, EXIT_OK
from collineate.core.config import Config, config_path
from collineate.core.logger import Logger
from collineate.core.utils import dump_json


def handle_config(args: Namespace) -> int:
    """
    Handle config commands.

    Returns:
        Exit code.
    """
    handlers = {
        "upgrade": _handle_upgrade,
        "show": _handle_show,
        "path": _handle_path,
    }

    handler = handlers.get(args.action)
    if handler:
        return handler(args)

    logger = Logger(verbose=getattr(args, "verbose", False))
    logger.info("Usage: collineate config <command>")
    logger.info("")
    logger.info("Commands:")
    logger.info("  show       Show the effective configuration")
    logger.info("  path       Show the configuration file path")
    logger.info("  upgrade    Add missing default keys to the configuration file")
    return EXIT_OK


def _handle_upgrade(args: Namespace) -> int:
    quiet = getattr(args, "quiet", False)
    logger = Logger(verbose=getattr(args, "verbose", False))

    result = Config().upgrade()
    if "error" in result:
        if not quiet:
            logger.error(f"Failed to upgrade config: {result['error']}")
        return EXIT_INPUT

    if quiet:
        return EXIT_OK
    if result["upgraded"]:
        logger.success(f"Configuration upgraded, added {len(result['added_keys'])} option(s):")
        for key in result["added_keys"]:
            logger.list_item(key)
    else:
        logger.success("Configuration is already up to date")
    return EXIT_OK


def _handle_show(args: Namespace) -> int:
    config = Config()
    if getattr(args, "json", False):
        print(dump_json({"schema": 1, "config": config.to_dict()}))
        return EXIT_OK
    Logger(verbose=getattr(args, "verbose", False)).header("Current Configuration")
    print(yaml.safe_dump(config.to_dict(), default_flow_style=False, sort_keys=False), end="")
    return EXIT_OK


def _handle_path(args: Namespace) -> int:
    logger = Logger(verbose=getattr(args, "verbose", False))
    path = config_path()
    logger.key_value("Config file", str(path))
    logger.key_value("Exists", "Yes" if path.exists() else "No")
    return EXIT_OK
