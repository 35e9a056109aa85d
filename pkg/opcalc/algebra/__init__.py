from .checking import *  # noqa: F401,F403
from .exception import *  # noqa: F401,F403
from .graded import *  # noqa: F401,F403
from .linalg import *  # noqa: F401,F403
from .permutations import *  # noqa: F401,F403
from .scalars import *  # noqa: F401,F403
from .smodule import *  # noqa: F401,F403
