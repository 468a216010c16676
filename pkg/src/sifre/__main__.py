from sifre.cli import main

main()
