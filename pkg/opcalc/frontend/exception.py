class InvalidPresentation(Exception):
    """Raise this to indicate there was an error in a presentation."""

    def __init__(self, msg, lineno=None, col=None, path=None):
        """
        Args:
            msg: Error message intended for the presentation writer to read.
            lineno: The line number the error occurred on.
            col: The column, counted from 1.
            path: Path to the presentation file with the error.
        """
        super().__init__()
        assert isinstance(msg, str), type(msg)
        assert isinstance(lineno, ((int,), type(None))), type(lineno)
        self.msg = msg
        self.lineno = lineno
        self.col = col
        self.path = path

    def location(self):
        """``path:line:col`` with whatever parts are known."""
        parts = [self.path or '<input>']
        if self.lineno is not None:
            parts.append(str(self.lineno))
            if self.col is not None:
                parts.append(str(self.col))
        return ':'.join(parts)

    def __str__(self):
        return repr(self)

    def __repr__(self):
        return 'InvalidPresentation({!r}, {!r}, {!r}, {!r})'.format(
            self.msg,
            self.lineno,
            self.col,
            self.path,
        )
