import sys

from proprunner import run_props
sys.exit(run_props())
