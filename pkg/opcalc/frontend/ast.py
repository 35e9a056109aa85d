class ASTNode:

    def __init__(self, path, lineno, col):
        """
        Args:
            lineno (int): The line number where the start of this element
                occurs.
            col (int): The column where this element starts, from 1.
        """
        self.path = path
        self.lineno = lineno
        self.col = col


class AstField(ASTNode):

    def __init__(self, path, lineno, col, name):
        """
        Args:
            name (str): ``Q`` or ``F<p>``.
        """
        super().__init__(path, lineno, col)
        self.name = name

    def __repr__(self):
        return 'AstField({!r})'.format(self.name)


class AstGenerator(ASTNode):

    def __init__(self, path, lineno, col, name, arity, degree, action=None):
        """
        Args:
            name (str): Label of the generator.
            arity (int): Number of inputs.
            degree (int): Homological degree.
            action (Optional[str]): ``trivial``, ``sign`` or ``regular``;
                None when the statement does not say.
        """
        super().__init__(path, lineno, col)
        self.name = name
        self.arity = arity
        self.degree = degree
        self.action = action

    def __repr__(self):
        return 'AstGenerator({!r}, {!r}, {!r}, {!r})'.format(
            self.name, self.arity, self.degree, self.action)


class AstLabel(ASTNode):

    def __init__(self, path, lineno, col, name, permutation=None):
        """
        Args:
            name (str): Generator name.
            permutation (Optional[tuple]): One-line images of the permutation
                the generator is acted on by, e.g. ``(2, 1)`` for ``mu[2,1]``.
        """
        super().__init__(path, lineno, col)
        self.name = name
        self.permutation = permutation

    def __repr__(self):
        return 'AstLabel({!r}, {!r})'.format(self.name, self.permutation)


class AstLeaf(ASTNode):

    def __init__(self, path, lineno, col, label):
        super().__init__(path, lineno, col)
        self.label = label

    def __repr__(self):
        return 'AstLeaf({!r})'.format(self.label)


class AstVertex(ASTNode):

    def __init__(self, path, lineno, col, label, children):
        """
        Args:
            label (AstLabel): The vertex label.
            children (list): AstVertex or AstLeaf nodes, in order.
        """
        super().__init__(path, lineno, col)
        self.label = label
        self.children = children

    def __repr__(self):
        return 'AstVertex({!r}, {!r})'.format(self.label, self.children)


class AstTerm(ASTNode):

    def __init__(self, path, lineno, col, numerator, denominator, atom):
        """
        Args:
            numerator (int): Signed numerator of the coefficient.
            denominator (int): Positive denominator.
            atom: AstLabel in differentials, AstVertex or AstLeaf in
                relations.
        """
        super().__init__(path, lineno, col)
        self.numerator = numerator
        self.denominator = denominator
        self.atom = atom

    def negated(self):
        return AstTerm(self.path, self.lineno, self.col, -self.numerator,
                       self.denominator, self.atom)

    def __repr__(self):
        return 'AstTerm({!r}/{!r}, {!r})'.format(
            self.numerator, self.denominator, self.atom)


class AstDifferential(ASTNode):

    def __init__(self, path, lineno, col, name, terms):
        super().__init__(path, lineno, col)
        self.name = name
        self.terms = terms

    def __repr__(self):
        return 'AstDifferential({!r}, {!r})'.format(self.name, self.terms)


class AstRelation(ASTNode):

    def __init__(self, path, lineno, col, terms):
        super().__init__(path, lineno, col)
        self.terms = terms

    def __repr__(self):
        return 'AstRelation({!r})'.format(self.terms)


class AstCommand(ASTNode):

    def __init__(self, path, lineno, col, verb):
        super().__init__(path, lineno, col)
        self.verb = verb

    def __repr__(self):
        return 'AstCommand({!r})'.format(self.verb)


class AstPresentation:
    """All statements of one presentation, grouped by kind."""

    def __init__(self, path, statements):
        self.path = path
        self.statements = statements
        self.fields = [s for s in statements if isinstance(s, AstField)]
        self.generators = [s for s in statements if isinstance(s, AstGenerator)]
        self.differentials = [s for s in statements if isinstance(s, AstDifferential)]
        self.relations = [s for s in statements if isinstance(s, AstRelation)]
        self.commands = [s for s in statements if isinstance(s, AstCommand)]

    @property
    def field(self):
        return self.fields[0].name if self.fields else None

    def __repr__(self):
        return 'AstPresentation({!r}, {} statements)'.format(
            self.path, len(self.statements))
