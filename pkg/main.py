"""
Main Application Entry Point
Features:
- Logging to a fresh-per-run debug log, a persistent log and stderr
- Dependency checks
- Exit codes for every outcome
- Performance monitoring
"""

import sys
import logging
import time
from pathlib import Path

from models.settings import get_settings


class LevelZeroApplication:
    """Command line application with logging and startup monitoring"""

    def __init__(self, verbose: bool = False):
        self.startup_time = time.time()
        self.verbose = verbose
        self.setup_logging()

    def setup_logging(self):
        """Detailed logging configuration; stdout stays reserved for command output"""
        log_format = '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'

        console = logging.StreamHandler(sys.stderr)
        console.setLevel(logging.INFO if self.verbose else logging.WARNING)
        handlers = [console]

        file_error = None
        log_dir = get_settings().log_dir
        if log_dir:
            logs_dir = Path(log_dir)
            try:
                logs_dir.mkdir(parents=True, exist_ok=True)
                handlers.append(logging.FileHandler(logs_dir / "level_zero.log"))
                debug_handler = logging.FileHandler(logs_dir / "level_zero_debug.log", mode='w')  # Fresh debug log each run
                debug_handler.setLevel(logging.DEBUG)
                handlers.append(debug_handler)
            except OSError as e:
                file_error = e

        logging.basicConfig(level=logging.DEBUG, format=log_format, handlers=handlers, force=True)
        for handler in handlers:
            if handler.level == logging.NOTSET:
                handler.setLevel(logging.INFO)

        # Set specific log levels for different components
        logging.getLogger("sympy").setLevel(logging.WARNING)

        self.logger = logging.getLogger(__name__)
        self.logger.info("=" * 50)
        self.logger.info("Level zero toolkit starting...")
        self.logger.info("=" * 50)
        if file_error:
            self.logger.warning(f"File logging disabled: {file_error}")

    def startup_performance_log(self):
        """Log startup performance metrics"""
        startup_duration = time.time() - self.startup_time
        self.logger.info(f"Startup completed in {startup_duration:.2f} seconds")

        # Log system info
        try:
            import psutil
            memory_info = psutil.virtual_memory()
            self.logger.info(f"System Memory: {memory_info.total / (1024**3):.1f}GB total, {memory_info.percent}% used")
        except ImportError:
            self.logger.info("psutil not available - install for system monitoring")

    def run(self, args) -> int:
        from models import cli

        self.startup_performance_log()
        start = time.time()
        exit_code = cli.run(args)
        self.logger.info(f"{args.command} finished with exit code {exit_code} in {time.time() - start:.2f}s")
        return exit_code


def check_dependencies():
    """Check for required dependencies and suggest installation"""
    missing_deps = []
    optional_deps = []

    # Required dependencies
    required = {
        'sympy': 'sympy>=1.12',
    }

    # Optional dependencies
    optional = {
        'psutil': 'psutil>=5.8.0',
    }

    for module, requirement in required.items():
        try:
            __import__(module)
        except ImportError:
            missing_deps.append(requirement)

    for module, requirement in optional.items():
        try:
            __import__(module)
        except ImportError:
            optional_deps.append(requirement)

    if missing_deps:
        print("Missing required dependencies:", file=sys.stderr)
        for dep in missing_deps:
            print(f"   - {dep}", file=sys.stderr)
        print("Please install with: pip install " + " ".join(missing_deps), file=sys.stderr)
        return False

    if optional_deps:
        logging.getLogger(__name__).debug("Missing optional dependencies: " + " ".join(optional_deps))

    return True


def main(argv=None):
    """Parse arguments, set up logging and dispatch"""
    if not check_dependencies():
        return 1

    from models import cli

    args = cli.build_parser().parse_args(argv)
    app = LevelZeroApplication(verbose=args.verbose)

    try:
        return app.run(args)
    except Exception as e:
        app.logger.critical(f"Critical error: {e}", exc_info=True)
        return 1


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("Interrupted", file=sys.stderr)
        sys.exit(130)
