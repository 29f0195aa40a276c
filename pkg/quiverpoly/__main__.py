"""Entry point for quiverpoly package."""

from .main import main

if __name__ == '__main__':
    main()
