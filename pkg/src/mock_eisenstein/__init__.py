from mock_eisenstein.cli_interface.run import app


def main() -> None:
    app()
