#ifndef KEC_VERIFY_HPP
#define KEC_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "kec/certificate.hpp"
#include "kec/graph.hpp"

namespace kec {

struct CanonGraph {
  std::string name;
  MultiGraph graph;
};

// THETA, K4, K33, PETERSEN, S6. S6 is two triangles, each with one doubled
// edge, joined by a bridge between their third vertices:
//   x1=0 y1=1 z1=2 x2=3 y2=4 z2=5
//   x1y1 x1y1 x1z1 y1z1 z1z2 x2y2 x2y2 x2z2 y2z2
// Throws std::invalid_argument listing the corpus for unknown names.
CanonGraph canon(std::string_view name);
std::vector<std::string> canon_names();

struct HarnessCaps {
  int factor_max_n = 16;
  int complement_max_n = 12;
  int conjecture_max_n = 10;
};

Certificate check_t1(const MultiGraph& g, const HarnessCaps& caps = {});
Certificate check_t2(const MultiGraph& g, const HarnessCaps& caps = {});
Certificate check_t3(const MultiGraph& g, const HarnessCaps& caps = {});
Certificate check_t5(const MultiGraph& g);
Certificate check_bounds(const MultiGraph& g);

// One certificate per maximal matching F: PASS iff some maximum
// 3-edge-colorable subgraph leaves only edges of F uncolored.
std::vector<Certificate> check_conjecture(const MultiGraph& g, const HarnessCaps& caps = {});

// Connected cubic multigraphs with n <= max_n (max_n <= 12) and
// nu2 + nu3 = 2n, one EXTREMAL certificate each.
std::vector<Certificate> search_extremal(int max_n, int jobs = 1);

// Connected cubic multigraphs with n <= max_n where 5 nu2 = 4n or
// 6 nu3 = 7n, as BOUNDS certificates.
std::vector<Certificate> search_bound_tight(int max_n, int jobs = 1);

struct Revalidation {
  bool ok = true;
  std::string reason;
};

// Re-checks a certificate from its own contents (witness colorings,
// matchings, recorded values) without repeating any search.
Revalidation revalidate(const Certificate& cert);

int default_jobs();

// Applies fn to every item on `jobs` threads; results keep input order and
// the first exception (by index) is rethrown.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, int jobs, Fn fn) -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<R> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace kec

#endif  // KEC_VERIFY_HPP
