"""
Main entry point for the intersector command line
Loads .env, configures loguru and dispatches to the subcommands
"""
import sys
from pathlib import Path

# Add backend to Python path
sys.path.insert(0, str(Path(__file__).parent))

from dotenv import load_dotenv

# Load environment variables before settings are read
load_dotenv()

from src.core.config import get_settings
from src.core.logging import configure_logging
from src.versuite.cli import run_cli


def main() -> int:
    configure_logging(get_settings())
    return run_cli(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
