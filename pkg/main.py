import sys

import dotenv

dotenv.load_dotenv()
from screenlab.cli import run
from screenlab.runtime import initialize_logging, load_screenlab_config


initialize_logging()
screenlab_config = load_screenlab_config()


def main():
    sys.exit(run(sys.argv[1:], screenlab_config))


if __name__ == "__main__":
    main()
