"""
Exceptions raised while loading run configurations and executing subcommands.
"""


class RunConfigError(Exception):
    """
    Raised when a run configuration cannot be loaded or is invalid.

    ``issues`` holds one ``"dotted.field.path: message"`` string per problem.
    """

    def __init__(self, issues: list[str], source: str | None = None):
        self.issues = list(issues)
        self.source = source
        where = f" in {source}" if source else ""
        super().__init__(f"Invalid run configuration{where}: " + "; ".join(self.issues))


class UsageError(Exception):
    """Raised when a subcommand is asked for something the configuration cannot provide"""
    pass
