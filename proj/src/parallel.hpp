#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace permrel::detail {

// Splits [0, count) into at most `jobs` contiguous ranges and runs
// f(begin, end, local) on each with its own Local. Results come back in range
// order; the first exception thrown by a worker is rethrown.
template <typename Local, typename F>
std::vector<Local> parallel_ranges(std::uint64_t count, unsigned jobs, F&& f) {
  jobs = std::max(1u, jobs);
  if (count < jobs) {
    jobs = static_cast<unsigned>(std::max<std::uint64_t>(count, 1));
  }
  std::vector<Local> locals(jobs);
  if (jobs == 1) {
    f(std::uint64_t{0}, count, locals[0]);
    return locals;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread>        threads;
  threads.reserve(jobs);
  std::uint64_t const chunk = (count + jobs - 1) / jobs;
  for (unsigned t = 0; t < jobs; ++t) {
    std::uint64_t const begin = std::min(count, chunk * t);
    std::uint64_t const end   = std::min(count, begin + chunk);
    threads.emplace_back([&, t, begin, end] {
      try {
        f(begin, end, locals[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) {
    th.join();
  }
  for (auto const& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return locals;
}

}  // namespace permrel::detail
