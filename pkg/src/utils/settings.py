import json
from pathlib import Path
from dataclasses import dataclass


@dataclass
class Settings:
    report_dir: Path
    graph_dir: Path


def load_settings(json_path: str = 'SETTINGS.json') -> Settings:
    with open(json_path, 'r') as f:
        data = json.load(f)
        settings = Settings(
            report_dir=Path(data['REPORT_DIR']),
            graph_dir=Path(data['GRAPH_DIR']),
        )
    return settings


if __name__ == '__main__':
    settings = load_settings()
    print(settings)
