"""
Reading and validating scenario documents.
"""
import json

from core.exceptions import ConfigurationError
from scenario.serializers import ScenarioSerializer


def flatten_errors(detail, prefix=''):
    """Serializer error detail as 'field.path: message' lines."""
    if isinstance(detail, dict):
        lines = []
        for key, value in detail.items():
            if key == 'non_field_errors':
                path = prefix
            else:
                path = f'{prefix}.{key}' if prefix else str(key)
            lines.extend(flatten_errors(value, path))
        return lines
    if isinstance(detail, list):
        lines = []
        for index, value in enumerate(detail):
            if isinstance(value, (dict, list)):
                lines.extend(flatten_errors(value, f'{prefix}[{index}]'))
            else:
                lines.append(f'{prefix or "scenario"}: {value}')
        return lines
    return [f'{prefix or "scenario"}: {detail}']


def parse_scenario(document):
    """Validate a decoded scenario document and build the Scenario."""
    serializer = ScenarioSerializer(data=document)
    if not serializer.is_valid():
        raise ConfigurationError('; '.join(flatten_errors(serializer.errors)))
    return serializer.save()


def load_scenario(path):
    try:
        with open(path, encoding='utf-8') as handle:
            document = json.load(handle)
    except OSError as exc:
        raise ConfigurationError(f'Cannot read scenario file {path}: {exc.strerror}')
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f'Scenario file {path} is not valid JSON: {exc}')
    except UnicodeDecodeError as exc:
        raise ConfigurationError(f'Scenario file {path} is not UTF-8 text: {exc.reason}')
    return parse_scenario(document)
