from gaussbeta.cli import main

main()
