from .girth import collision_search_birthday, exact_girth_bfs, girth_lower_bound
from .growth import enumerate_growth, periodic_spectral_radius, random_growth
from .reports import CapExceeded, GirthReport, GrowthReport, LyapunovReport
from .stream import emit_stream, monobit_test, runs_test
