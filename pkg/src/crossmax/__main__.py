from crossmax.cli import main

main()
