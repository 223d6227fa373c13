from kepler_consonance.cli import main

main()
