from qdesk.cli import main

main()
