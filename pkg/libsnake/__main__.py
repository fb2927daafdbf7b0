from libsnake.cli import main

main()
