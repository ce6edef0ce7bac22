from .interface import main

main()
