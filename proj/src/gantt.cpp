#include "shopsched/gantt.hpp"

#include <algorithm>
#include <sstream>

namespace shopsched {

char job_symbol(std::size_t job) {
  static constexpr char kSymbols[] =
      "123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  return kSymbols[job % (sizeof(kSymbols) - 1)];
}

std::string render_gantt(const FlowShopInstance& inst, const JobSequence& seq, const Timeline& tl,
                         std::size_t max_columns) {
  const Duration makespan = tl.makespan(inst);
  max_columns = std::max<std::size_t>(max_columns, 1);
  const Duration scale = makespan <= max_columns ? 1 : (makespan + max_columns - 1) / max_columns;
  const auto columns = static_cast<std::size_t>((makespan + scale - 1) / scale);

  std::ostringstream out;
  if (scale > 1) out << "scale: 1 column = " << scale << " time units\n";

  const std::size_t label_width = std::to_string(inst.machines()).size() + 1;
  for (std::size_t i = 0; i < inst.machines(); ++i) {
    std::string cells(columns, kIdleCell);
    for (std::size_t job : seq.order) {
      const Duration begin = tl.start[i][job];
      const Duration end = begin + inst.time(i, job);
      for (Duration c = begin / scale; c <= (end - 1) / scale && c < columns; ++c) {
        if (cells[c] == kIdleCell) cells[c] = job_symbol(job);
      }
    }
    std::string label = "M" + std::to_string(i + 1);
    label.resize(label_width, ' ');
    out << label << " |" << cells << "|\n";
  }

  // Ruler: a tick label every 10 columns.
  std::string ruler(columns + 1, ' ');
  for (std::size_t c = 0; c <= columns; c += 10) {
    const std::string tick = std::to_string(c * scale);
    if (c + tick.size() > ruler.size()) ruler.resize(c + tick.size(), ' ');
    ruler.replace(c, tick.size(), tick);
  }
  out << std::string(label_width + 2, ' ') << ruler << '\n';
  out << "cmax=" << makespan << '\n';
  return out.str();
}

}  // namespace shopsched
