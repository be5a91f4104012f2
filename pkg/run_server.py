#!/usr/bin/env python3
"""
Direct runner for the Sigma-Delta Circle MCP server
"""

import sys
import os

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

if __name__ == "__main__":
    from sigma_delta_circle.server import main, settings

    print("Starting Sigma-Delta Circle MCP Server")
    print("-" * 60)
    print("Server endpoints:")
    print(f"  Health check: http://{settings.host}:{settings.port}/health")
    print(f"  MCP endpoint: http://{settings.host}:{settings.port}/mcp")
    print(f"Reports directory: {settings.output_dir}")
    print("-" * 60)

    main()
