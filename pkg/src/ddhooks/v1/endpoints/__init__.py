from .asymp import Asymp
from .decompose import Decompose
from .dist import Dist
from .hooks import Hooks
from .moments import Moments
from .series import Series
from .verify import Verify

__all__ = ['Asymp', 'Decompose', 'Dist', 'Hooks', 'Moments', 'Series', 'Verify']
