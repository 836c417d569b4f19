// Serial vs OpenMP oracle timings, plus the linear-time two-machine solver
// on growing chain instances.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "shopsched/cli.hpp"
#include "shopsched/f2_solver.hpp"
#include "shopsched/hardness_gen.hpp"
#include "shopsched/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

shopsched::FlowShopInstance random_flow(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<shopsched::Duration> d(1, 4);
  std::vector<std::vector<shopsched::Duration>> rows(m, std::vector<shopsched::Duration>(n));
  for (auto& row : rows)
    for (auto& v : row) v = d(rng);
  return shopsched::FlowShopInstance(std::move(rows));
}

}  // namespace

int main() {
  using namespace shopsched;
  std::printf("threads=%d\n", omp_get_max_threads());

  std::mt19937_64 rng(7);
  for (std::size_t n : {7u, 8u, 9u}) {
    const FlowShopInstance inst = random_flow(3, n, rng);
    Solution a = serial::brute_force_flow(inst);
    Solution b = serial::brute_force_flow(inst);
    const double ts = time_ms([&] { a = serial::brute_force_flow(inst); });
    const double tp = time_ms([&] { b = brute_force_flow(inst); });
    std::printf("flow oracle n=%zu serial_ms=%.2f parallel_ms=%.2f agree=%d\n", n, ts, tp,
                a.feasible() == b.feasible());
  }

  const NmtsInstance nm{{1, 2}, {1, 3}, {3, 4}};
  for (auto reduce : {nmts_to_j2, nmts_to_o2}) {
    const ShopInstance shop = reduce(nm).shop;
    std::optional<ShopSchedule> a, b;
    const double ts = time_ms([&] { a = serial::brute_force_shop(shop); });
    const double tp = time_ms([&] { b = brute_force_shop(shop); });
    std::printf("%s oracle n=%zu serial_ms=%.2f parallel_ms=%.2f agree=%d\n", to_string(shop.kind),
                shop.jobs.size(), ts, tp, a == b);
  }

  for (std::size_t n = 1000; n <= 1000000; n *= 10) {
    const FlowShopInstance inst = cli::make_chain_instance(n);
    const double ms = time_ms([&] { (void)solve_f2(inst); });
    std::printf("solve_f2 chain n=%zu ms=%.3f\n", n, ms);
  }
}
