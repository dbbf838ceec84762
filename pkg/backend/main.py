"""
Main Entry Point
Unified entry point for both CLI and API modes
"""

import sys


def run_cli_mode(argv):
    """Run CLI mode"""
    try:
        from cli import main
    except ImportError as e:
        print(f"❌ Failed to import CLI module: {e}", file=sys.stderr)
        sys.exit(1)
    sys.exit(main(argv))


def run_api_mode():
    """Run API mode"""
    try:
        from api import app
        import uvicorn
        from config import Config
    except ImportError as e:
        print(f"❌ Failed to import API module: {e}")
        sys.exit(1)

    errors = Config.validate_config()
    if errors:
        print("❌ Configuration errors:")
        for error in errors:
            print(f"   - {error}")
        sys.exit(1)
    Config.setup_logging()
    Config.create_directories()

    print("🚀 Starting Knot Moves API Server...")
    print(f"   API: http://{Config.API_HOST}:{Config.API_PORT}")
    print(f"   Docs: http://{Config.API_HOST}:{Config.API_PORT}/docs")
    uvicorn.run(app, host=Config.API_HOST, port=Config.API_PORT)


def main():
    """Main entry point"""
    if len(sys.argv) > 1:
        mode = sys.argv[1].lower()

        if mode in ['cli', 'command']:
            run_cli_mode(sys.argv[2:])
        elif mode in ['api', 'server', 'web']:
            run_api_mode()
        elif mode in ['help', '--help', '-h']:
            show_help()
        else:
            print(f"❌ Unknown mode: {mode}")
            show_help()
            sys.exit(1)
    else:
        show_help()


def show_help():
    """Show help information"""
    help_text = """
🪢 Knot Moves - Help

📋 Usage:
  python main.py [mode] [arguments]

🎯 Modes:
  cli, command <command> ...   - Run a CLI command
  api, server, web             - Run API server
  help, --help, -h             - Show this help

📁 Examples:
  python main.py cli compute "named:4_1"
  python main.py cli compare "named:6^3_1" "mirror(named:6^3_1)"
  python main.py cli table 4.1 --only=39
  python main.py cli density 6
  python main.py cli reduce-rational 9/4
  python main.py cli reduce-montesinos "montesinos:[3/5,1/2,1/2]"
  python main.py api

🔧 Configuration:
  - Edit config.py for settings
  - Set environment variables in .env file (crossing limits, log level)

📚 Documentation:
  - API docs: http://localhost:8000/docs
    """
    print(help_text)


if __name__ == "__main__":
    main()
