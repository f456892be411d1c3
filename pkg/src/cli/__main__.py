from src.cli.cli import main

main()
