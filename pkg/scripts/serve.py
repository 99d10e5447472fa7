#!/usr/bin/env python3
"""Start the HTTP API (plus the web UI when frontend/dist exists)."""

from termite.server import main

if __name__ == "__main__":
    main()
