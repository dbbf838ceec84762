"""
Knot Moves Application - Main Entry Point
Imports and orchestrates the modular components from the backend folder
"""

import sys
from pathlib import Path

# Add backend folder to Python path
backend_path = Path(__file__).parent / "backend"
sys.path.insert(0, str(backend_path))

from config import Config
from engine import InvariantEngine, catalog_info
from api import app as fastapi_app
from cli import main as cli_main


class KnotMovesSystem:
    """Integrated system: engine, catalog, CLI and API"""

    def __init__(self):
        """Initialize the complete system"""
        print("🚀 Initializing Knot Moves System...")

        errors = Config.validate_config()
        if errors:
            print("❌ Configuration errors:")
            for error in errors:
                print(f"   - {error}")
            sys.exit(1)

        Config.setup_logging()
        Config.create_directories()
        self.engine = InvariantEngine()

        print("✅ Knot Moves System initialized successfully")

    def get_system_status(self):
        """Get system status"""
        return {
            "configuration": {
                "bracket_limit": Config.BRACKET_CROSSING_LIMIT,
                "kauffman_limit": Config.KAUFFMAN_CROSSING_LIMIT,
                "bracket_method": Config.BRACKET_METHOD,
                "catalog_path": str(Config.CATALOG_PATH),
            },
            "catalog": catalog_info(),
        }

    def run_api_mode(self):
        """Run API mode"""
        print("\n🌐 Starting API Mode...")
        import uvicorn
        print(f"   API: http://{Config.API_HOST}:{Config.API_PORT}")
        print(f"   Docs: http://{Config.API_HOST}:{Config.API_PORT}/docs")
        uvicorn.run(fastapi_app, host=Config.API_HOST, port=Config.API_PORT)

    def show_status(self):
        """Display system status"""
        status = self.get_system_status()

        print("\n" + "=" * 60)
        print("📊 KNOT MOVES SYSTEM STATUS")
        print("=" * 60)

        print("\n🔧 Configuration:")
        for key, value in status["configuration"].items():
            print(f"   {key}: {value}")

        print("\n🗄️  Catalog:")
        for key, value in status["catalog"].items():
            print(f"   {key}: {value}")


def main():
    """Main entry point"""
    if len(sys.argv) > 1:
        mode = sys.argv[1].lower()

        if mode in ['cli', 'command']:
            sys.exit(cli_main(sys.argv[2:]))
        elif mode in ['api', 'server', 'web']:
            KnotMovesSystem().run_api_mode()
        elif mode in ['status', 'info']:
            KnotMovesSystem().show_status()
        elif mode in ['help', '--help', '-h']:
            show_help()
        else:
            print(f"❌ Unknown mode: {mode}")
            show_help()
            sys.exit(1)
    else:
        KnotMovesSystem().show_status()


def show_help():
    """Show help information"""
    help_text = """
🪢 Knot Moves Application - Help

📋 Usage:
  python index.py [mode] [arguments]

🎯 Modes:
  cli, command <command> ...   - Run a CLI command (compute, compare, table, ...)
  api, server, web             - Run API server
  status, info                 - Show system status (default)
  help, --help, -h             - Show this help

🧩 Components:
  - Config: environment settings and crossing limits
  - Algebra: Laurent polynomials and cyclotomic integers
  - Diagram: PD codes, builders and move rewriting
  - Bracket / Kauffman / Colorings: the invariant suite
  - Tangles / Montesinos: rational and Montesinos classification
  - Catalog: braid table, 5-move boxes and named links
  - API: FastAPI REST interface
  - CLI: argparse command-line interface
    """
    print(help_text)


if __name__ == "__main__":
    main()
