"""Package entry point: python -m lacin"""

from lacin.main import main

main()
