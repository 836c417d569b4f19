#pragma once

#include <cstddef>
#include <string>

#include "shopsched/core_model.hpp"

namespace shopsched {

inline constexpr char kIdleCell = '.';

/// Symbol for job j (0-based): 1-9, then a-z, then A-Z, cycling.
char job_symbol(std::size_t job);

/// ASCII chart with one row per machine and one column per time unit. When
/// the makespan exceeds `max_columns`, each column covers k time units and a
/// `scale:` line is printed; a column shows the first job busy in its range.
std::string render_gantt(const FlowShopInstance& inst, const JobSequence& seq, const Timeline& tl,
                         std::size_t max_columns = 200);

}  // namespace shopsched
