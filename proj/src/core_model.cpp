#include "shopsched/core_model.hpp"

#include <algorithm>
#include <sstream>

namespace shopsched {

FlowShopInstance FlowShopInstance::from_pairs(
    const std::vector<std::pair<Duration, Duration>>& jobs) {
  std::vector<std::vector<Duration>> rows(2);
  rows[0].reserve(jobs.size());
  rows[1].reserve(jobs.size());
  for (const auto& [first, second] : jobs) {
    rows[0].push_back(first);
    rows[1].push_back(second);
  }
  return FlowShopInstance(std::move(rows));
}

Duration Timeline::makespan(const FlowShopInstance& inst) const {
  Duration latest = 0;
  for (std::size_t i = 0; i < start.size(); ++i) {
    for (std::size_t j = 0; j < start[i].size(); ++j) {
      latest = std::max(latest, start[i][j] + inst.time(i, j));
    }
  }
  return latest;
}

const char* to_string(InfeasibleReason reason) {
  switch (reason) {
    case InfeasibleReason::ConditionC1Violated:
      return "ConditionC1Violated";
    case InfeasibleReason::DegreeImbalance:
      return "DegreeImbalance";
    case InfeasibleReason::Disconnected:
      return "Disconnected";
  }
  return "Unknown";
}

const char* to_string(ChainCase c) { return c == ChainCase::Case1 ? "Case1" : "Case2"; }

void validate_instance(const FlowShopInstance& inst) {
  const auto& rows = inst.rows();
  if (rows.empty() || rows.front().empty()) {
    throw ValidationError(ValidationErrorKind::DimensionMismatch, 0, 0,
                          "instance needs at least one machine and one job");
  }
  if (rows.size() < 2) {
    throw ValidationError(ValidationErrorKind::TooFewMachines, 0, 0,
                          "at least two machines are required");
  }
  const std::size_t n = rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) {
      std::ostringstream msg;
      msg << "machine " << i + 1 << " has " << rows[i].size() << " entries, expected " << n;
      throw ValidationError(ValidationErrorKind::DimensionMismatch, i, 0, msg.str());
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] == 0) {
        std::ostringstream msg;
        msg << "non-positive processing time at machine " << i + 1 << ", job " << j + 1;
        throw ValidationError(ValidationErrorKind::NonPositiveTime, i, j, msg.str());
      }
    }
  }
}

void validate_sequence(const FlowShopInstance& inst, const JobSequence& seq) {
  const std::size_t n = inst.jobs();
  if (seq.size() != n) {
    throw std::invalid_argument("sequence length does not match the job count");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t job : seq.order) {
    if (job >= n || seen[job]) {
      throw std::invalid_argument("sequence is not a permutation of the jobs");
    }
    seen[job] = true;
  }
}

InstanceAggregates aggregates(const FlowShopInstance& inst) {
  InstanceAggregates agg;
  for (Duration d : inst.rows().front()) agg.first_machine_total += d;
  for (Duration d : inst.rows().back()) agg.last_machine_total += d;
  return agg;
}

Timeline earliest_no_wait_timeline(const FlowShopInstance& inst, const JobSequence& seq) {
  const std::size_t m = inst.machines();
  Timeline tl;
  tl.start.assign(m, std::vector<Duration>(inst.jobs(), 0));

  // head[i]: time from a job's block start to the start of its op on machine i.
  std::vector<Duration> prev_head(m + 1, 0);
  std::vector<Duration> head(m + 1, 0);
  Duration prev_offset = 0;
  bool first = true;
  for (std::size_t job : seq.order) {
    head[0] = 0;
    for (std::size_t i = 0; i < m; ++i) head[i + 1] = head[i] + inst.time(i, job);

    Duration offset = 0;
    if (!first) {
      // Op i of this job may not start before op i of the previous job ends.
      offset = prev_offset;
      for (std::size_t i = 0; i < m; ++i) {
        const Duration prev_end = prev_offset + prev_head[i + 1];
        if (prev_end > head[i]) offset = std::max(offset, prev_end - head[i]);
      }
    }
    for (std::size_t i = 0; i < m; ++i) tl.start[i][job] = offset + head[i];
    prev_offset = offset;
    prev_head.swap(head);
    first = false;
  }
  return tl;
}

FeasibilityReport check_no_idle_no_wait(const FlowShopInstance& inst, const JobSequence& seq,
                                        const Timeline& tl) {
  FeasibilityReport report;
  const std::size_t m = inst.machines();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
      const std::size_t cur = seq.order[k];
      const std::size_t next = seq.order[k + 1];
      const Duration end = tl.start[i][cur] + inst.time(i, cur);
      const Duration begin = tl.start[i][next];
      if (begin > end) {
        report.idle.push_back({i, k, begin - end});
      } else if (begin < end) {
        report.overlaps.push_back({i, next});
      }
    }
  }
  for (std::size_t job : seq.order) {
    for (std::size_t i = 0; i + 1 < m; ++i) {
      const Duration end = tl.start[i][job] + inst.time(i, job);
      const Duration begin = tl.start[i + 1][job];
      if (begin > end) {
        report.waits.push_back({job, i, begin - end});
      } else if (begin < end) {
        report.overlaps.push_back({i + 1, job});
      }
    }
  }
  return report;
}

Duration chain_makespan(const FlowShopInstance& inst, std::size_t first_job) {
  const std::size_t m = inst.machines();
  Duration head = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) head += inst.time(i, first_job);
  Duration tail = 0;
  for (Duration d : inst.row(m - 1)) tail += d;
  return head + tail;
}

}  // namespace shopsched
