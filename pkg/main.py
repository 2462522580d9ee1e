import sys

from cli import main

if __name__ == "__main__":
    if sys.argv[1:2] == ["serve"]:
        from server import mcp
        from cli.tools import *

        print("Starting spherical friezes MCP server (stdio)...", file=sys.stderr)
        mcp.run()
    else:
        sys.exit(main())
