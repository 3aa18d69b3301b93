from radbound.cli.main import main

raise SystemExit(main())
