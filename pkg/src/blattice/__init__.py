"""Exact counting over the lattice of type-B set partitions."""
from .config import BoundExceeded, Settings, get_settings, load_settings, set_settings
from .partitions import (PartitionError, PartitionShape, SignedPartition, from_blocks,
                         from_set_partition, is_minimally_intersecting, make_partition,
                         maximal_partition, meet, meet_all, minimal_partition, parse,
                         refines, serialize, shape_of)
from .enumeration import (all_shapes, enumerate_a, enumerate_b, enumerate_b_no_zero,
                          enumerate_by_shape, enumerate_universe)
from .algebra import (AlgebraError, BoundedPoly, IntervalValue, RationalSeries, exp_neg,
                      series_compose, series_mul)
from .exact import (CountError, bell_number, count_of_shape, dowling_number, n2b_exact,
                    n2d_exact, n_no_zero, na_pi, na_r_exact, nb_pi, nb_pi_l, nd_pi, nd_pi_l,
                    nd_r_exact, stirling1_signed, stirling2)
from .analytic import (SeriesError, SeriesResult, benoumhani_dowling, dobinski, n2b_series,
                       n2d_series, nb_pi_series, nbr_series, ndr_series, nn_series,
                       pittel_nar_series)
from .oracle import oracle_count_partners, oracle_count_tuples, oracle_meet_closure_check

__version__ = "0.1.0"
