from shorqjit.main import main

main()
