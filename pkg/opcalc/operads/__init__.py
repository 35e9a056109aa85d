from .checks import *  # noqa: F401,F403
from .colimits import *  # noqa: F401,F403
from .exception import *  # noqa: F401,F403
from .finality import *  # noqa: F401,F403
from .free import *  # noqa: F401,F403
from .operad import *  # noqa: F401,F403
from .truncation import *  # noqa: F401,F403
from .zoo import *  # noqa: F401,F403
