from weylgrid.cli import main

main()
