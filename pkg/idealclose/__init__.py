name = "idealclose"

from idealclose.version import __version__, __version_info__

from idealclose.poly import PolynomialRing
from idealclose.groebner import Ideal
from idealclose.groebner import RingMap
from idealclose.lab import analyze
from idealclose.session import parse_session
from idealclose.session import run_session
from idealclose import closures
from idealclose import finite
from idealclose import io
from idealclose import lab
from idealclose import reductions
from idealclose import utils
