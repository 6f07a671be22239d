"""
Configuration manager for cyclo run profiles
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from cyclo.equivalence import EQUIVALENCE_CAP
from cyclo.harness.enumeration import ENUMERATION_CAP
from cyclo.utils import expand_env_vars

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ('text', 'json')


@dataclass
class Profile:
    """Run settings for searches, enumeration and reporting"""
    name: str
    threads: Optional[int] = None
    equivalence_cap: int = EQUIVALENCE_CAP
    enumeration_cap: int = ENUMERATION_CAP
    prune: bool = True
    dedup: bool = True
    output_format: str = 'text'
    description: Optional[str] = None


class ConfigManager:
    """Manage profiles from configuration files"""

    DEFAULT_CONFIG_DIR = Path.home() / '.cyclo'
    DEFAULT_CONFIG_FILE = DEFAULT_CONFIG_DIR / 'config.yaml'
    PROJECT_CONFIG_FILE = Path('.cyclo.yaml')

    def __init__(self, config_file: Optional[Path] = None):
        """
        Initialize config manager

        Args:
            config_file: Optional path to config file. If None, uses default locations.
        """
        self.config_file = config_file
        self.profiles: Dict[str, Profile] = {}
        self._load_config()

    def _load_config(self):
        """Load profiles; the project file is read last so its profiles win"""
        config_paths = []
        if self.config_file:
            if self.config_file.exists():
                config_paths.append(self.config_file)
            else:
                logger.warning(f"Config file not found: {self.config_file}")
        elif self.DEFAULT_CONFIG_FILE.exists():
            config_paths.append(self.DEFAULT_CONFIG_FILE)
        if self.PROJECT_CONFIG_FILE.exists():
            config_paths.append(self.PROJECT_CONFIG_FILE)

        for config_path in config_paths:
            try:
                with open(config_path, 'r') as f:
                    config_data = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ValueError(f"Invalid YAML in config file {config_path}:\n{e}")
            self._parse_profiles(config_data, config_path)

    def _parse_profiles(self, config_data: Dict[str, Any], config_path: Path):
        """
        Parse profiles from config data

        Args:
            config_data: Parsed YAML data
            config_path: Path to config file (for error messages)

        Raises:
            ValueError: If a profile holds an invalid value
        """
        if not isinstance(config_data, dict):
            return
        for profile_name, data in (config_data.get('profiles') or {}).items():
            if not isinstance(data, dict):
                continue
            data = {key: expand_env_vars(value) for key, value in data.items()}
            self.profiles[profile_name] = Profile(
                name=profile_name,
                threads=self._optional_int(data, 'threads', 1, None, config_path, profile_name),
                equivalence_cap=self._optional_int(
                    data, 'equivalence_cap', 1, EQUIVALENCE_CAP, config_path, profile_name
                ) or EQUIVALENCE_CAP,
                enumeration_cap=self._optional_int(
                    data, 'enumeration_cap', 1, ENUMERATION_CAP, config_path, profile_name
                ) or ENUMERATION_CAP,
                prune=self._flag(data, 'prune', True),
                dedup=self._flag(data, 'dedup', True),
                output_format=self._output_format(data, config_path, profile_name),
                description=data.get('description'),
            )

    @staticmethod
    def _optional_int(data: Dict[str, Any], key: str, low: int, high: Optional[int],
                      config_path: Path, profile_name: str) -> Optional[int]:
        value = data.get(key)
        if value is None:
            return None
        try:
            number = int(value)
        except (TypeError, ValueError):
            raise ValueError(
                f"Invalid {key} '{value}' in profile '{profile_name}' at {config_path}.\n"
                f"{key} must be an integer"
            )
        if number < low or (high is not None and number > high):
            bound = f"between {low} and {high}" if high is not None else f"at least {low}"
            raise ValueError(
                f"Invalid {key} '{value}' in profile '{profile_name}' at {config_path}.\n"
                f"{key} must be {bound}"
            )
        return number

    @staticmethod
    def _flag(data: Dict[str, Any], key: str, default: bool) -> bool:
        value = data.get(key, default)
        if isinstance(value, str):
            return value.strip().lower() in ('1', 'true', 'yes', 'on')
        return bool(value)

    @staticmethod
    def _output_format(data: Dict[str, Any], config_path: Path, profile_name: str) -> str:
        output_format = data.get('output_format', 'text')
        if output_format not in OUTPUT_FORMATS:
            raise ValueError(
                f"Invalid output_format '{output_format}' in profile '{profile_name}' at {config_path}.\n"
                f"Supported formats: {', '.join(OUTPUT_FORMATS)}"
            )
        return output_format

    def get_profile(self, profile_name: str) -> Optional[Profile]:
        return self.profiles.get(profile_name)

    def list_profiles(self) -> Dict[str, Profile]:
        """Get all available profiles"""
        return self.profiles.copy()

    def resolve_profile(self, profile_name: Optional[str] = None) -> Profile:
        """
        Profile to run with: the named one, else 'default' if present, else built-in defaults

        Raises:
            ValueError: If a named profile does not exist
        """
        if profile_name:
            profile = self.get_profile(profile_name)
            if profile is None:
                known = ', '.join(sorted(self.profiles)) or 'none'
                raise ValueError(f"Profile '{profile_name}' not found.\nAvailable profiles: {known}")
            return profile
        return self.profiles.get('default') or Profile(name='default')

    def create_default_config(self) -> Path:
        """
        Create a default config file with example profiles

        Returns:
            Path to created config file
        """
        self.DEFAULT_CONFIG_DIR.mkdir(parents=True, exist_ok=True)
        example_config = {
            'profiles': {
                'default': {
                    'description': 'Interactive use',
                    'threads': 1,
                    'prune': True,
                    'dedup': True,
                    'output_format': 'text',
                },
                'batch': {
                    'description': 'Exhaustive runs on a workstation',
                    'threads': '${CYCLO_THREADS:-4}',
                    'enumeration_cap': ENUMERATION_CAP,
                    'output_format': 'json',
                },
            }
        }
        with open(self.DEFAULT_CONFIG_FILE, 'w') as f:
            yaml.dump(example_config, f, default_flow_style=False, sort_keys=False)
        return self.DEFAULT_CONFIG_FILE
