#pragma once

// Domain types shared by every solver and oracle: flow shop instances, job
// sequences, no-wait timelines and the solver result type.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace shopsched {

using Duration = std::uint64_t;

enum class ValidationErrorKind { NonPositiveTime, DimensionMismatch, TooFewMachines };

/// Raised when an instance violates the model. `machine`/`job` are 0-based
/// and only meaningful for NonPositiveTime (and the offending row for
/// DimensionMismatch).
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationErrorKind kind, std::size_t machine, std::size_t job,
                  const std::string& what)
      : std::invalid_argument(what), kind_(kind), machine_(machine), job_(job) {}

  ValidationErrorKind kind() const noexcept { return kind_; }
  std::size_t machine() const noexcept { return machine_; }
  std::size_t job() const noexcept { return job_; }

 private:
  ValidationErrorKind kind_;
  std::size_t machine_;
  std::size_t job_;
};

/// Processing-time matrix, one row per machine in visiting order.
/// Construction never throws; call validate_instance() before solving.
class FlowShopInstance {
 public:
  FlowShopInstance() = default;
  explicit FlowShopInstance(std::vector<std::vector<Duration>> rows) : rows_(std::move(rows)) {}

  /// Two-machine convenience: one (p1, p2) pair per job.
  static FlowShopInstance from_pairs(const std::vector<std::pair<Duration, Duration>>& jobs);

  std::size_t machines() const noexcept { return rows_.size(); }
  std::size_t jobs() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }
  Duration time(std::size_t machine, std::size_t job) const { return rows_[machine][job]; }
  const std::vector<Duration>& row(std::size_t machine) const { return rows_[machine]; }
  const std::vector<std::vector<Duration>>& rows() const noexcept { return rows_; }

  bool operator==(const FlowShopInstance&) const = default;

 private:
  std::vector<std::vector<Duration>> rows_;
};

/// order[k] is the job in position k.
struct JobSequence {
  std::vector<std::size_t> order;

  std::size_t size() const noexcept { return order.size(); }
  std::size_t front() const { return order.front(); }
  bool operator==(const JobSequence&) const = default;
};

/// start[i][j]: start of job j's operation on machine i.
struct Timeline {
  std::vector<std::vector<Duration>> start;

  /// Latest completion over all operations.
  Duration makespan(const FlowShopInstance& inst) const;
  bool operator==(const Timeline&) const = default;
};

struct IdleGap {
  std::size_t machine;
  std::size_t position;  // gap sits between positions `position` and `position + 1`
  Duration length;
};

struct WaitGap {
  std::size_t job;
  std::size_t machine;  // gap between machine `machine` and `machine + 1`
  Duration length;
};

/// An operation that starts before its predecessor (on the machine or in the
/// job) has finished. Only reachable for hand-built timelines.
struct Overlap {
  std::size_t machine;
  std::size_t job;
};

struct FeasibilityReport {
  std::vector<IdleGap> idle;
  std::vector<WaitGap> waits;
  std::vector<Overlap> overlaps;

  bool empty() const noexcept { return idle.empty() && waits.empty() && overlaps.empty(); }
};

/// Case 1: the chain has fixed endpoints. Case 2: the chain closes into a
/// cycle and any rotation is feasible.
enum class ChainCase { Case1, Case2 };

enum class InfeasibleReason { ConditionC1Violated, DegreeImbalance, Disconnected };

struct Feasible {
  JobSequence sequence;
  Duration cmax = 0;
  ChainCase chain_case = ChainCase::Case1;
  bool operator==(const Feasible&) const = default;
};

struct Infeasible {
  InfeasibleReason reason;
  bool operator==(const Infeasible&) const = default;
};

class Solution {
 public:
  Solution(Feasible f) : value_(std::move(f)) {}      // NOLINT(google-explicit-constructor)
  Solution(Infeasible i) : value_(i) {}               // NOLINT(google-explicit-constructor)

  bool feasible() const noexcept { return std::holds_alternative<Feasible>(value_); }
  const Feasible& schedule() const { return std::get<Feasible>(value_); }
  InfeasibleReason reason() const { return std::get<Infeasible>(value_).reason; }

  bool operator==(const Solution&) const = default;

 private:
  std::variant<Feasible, Infeasible> value_;
};

struct InstanceAggregates {
  Duration first_machine_total = 0;
  Duration last_machine_total = 0;
};

const char* to_string(InfeasibleReason reason);
const char* to_string(ChainCase c);

/// Throws ValidationError. Requires at least two machines, one job, a
/// rectangular matrix and strictly positive entries.
void validate_instance(const FlowShopInstance& inst);

/// Throws std::invalid_argument unless `seq` is a permutation of 0..n-1.
void validate_sequence(const FlowShopInstance& inst, const JobSequence& seq);

InstanceAggregates aggregates(const FlowShopInstance& inst);

/// Each job is a rigid block (no waiting between its operations); blocks are
/// placed in sequence order at the smallest offset that avoids overlap on
/// every machine. The first job starts at time 0. Idle time is allowed here;
/// check_no_idle_no_wait() reports it.
Timeline earliest_no_wait_timeline(const FlowShopInstance& inst, const JobSequence& seq);

FeasibilityReport check_no_idle_no_wait(const FlowShopInstance& inst, const JobSequence& seq,
                                        const Timeline& tl);

/// Makespan of a no-idle/no-wait chain: sum of the first job's times on all
/// machines but the last, plus the last machine's total load.
Duration chain_makespan(const FlowShopInstance& inst, std::size_t first_job);

}  // namespace shopsched
