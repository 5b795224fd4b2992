# Four scheduling problems, solved from Python rather than the command line
#
# Activities are constrained by Start-to-Finish lags (completion of i cannot
# come before the start of j plus a lag) and Start-to-Start lags (start of i
# cannot come before the start of j plus a lag).

from maxplus import TropMatrix, TropVector
from maxplus.io import emit_human
from maxplus.scheduling import (
    earliest_start_ss,
    latest_start_mixed,
    latest_start_sf,
    min_flow_time,
)

SF = TropMatrix([[8, 10, None, None], [None, 5, 4, 8], [6, 12, 11, 7], [None, None, None, 12]])
SS = TropMatrix([[0, -2, None, None], [None, 0, 3, -1], [-1, None, 0, -4], [2, None, None, 0]])

# %% latest start that meets due dates exactly, or as closely as possible

print(emit_human(latest_start_sf(SF, TropVector([14, 11, 16, 15])), "due dates met"))
print(emit_human(latest_start_sf(SF, TropVector([15, 15, 15, 15])), "due dates approximated"))

# %% earliest start under release dates

print(emit_human(earliest_start_ss(SS, TropVector([1, 1, 2, 1])), "earliest start"))

# %% both kinds of constraints together

print(emit_human(latest_start_mixed(SF, SS, TropVector([13, 11, 15, 15])), "latest start, mixed"))

# %% shortest possible longest flow time

A = TropMatrix([[2, 4, 4], [2, 3, 5], [3, 2, 3]])
print(emit_human(min_flow_time(A, TropVector([9, 8, 9])), "least maximum flow time"))
