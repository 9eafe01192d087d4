"""
Командная строка лаборатории.

Содержит:
- config.py: RunConfig (pydantic) и загрузка конфигурации
- commands.py: подкоманды profile / portrait / criterion / spectrum / evolve / verify-all
"""

from .config import RunConfig, load_run_config
from .commands import (
    cmd_profile,
    cmd_portrait,
    cmd_criterion,
    cmd_spectrum,
    cmd_evolve,
    cmd_verify_all,
    COMMANDS,
    build_parser,
    main,
)

__all__ = [
    'RunConfig',
    'load_run_config',
    'cmd_profile',
    'cmd_portrait',
    'cmd_criterion',
    'cmd_spectrum',
    'cmd_evolve',
    'cmd_verify_all',
    'COMMANDS',
    'build_parser',
    'main',
]
