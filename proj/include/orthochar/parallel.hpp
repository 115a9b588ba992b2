/**
 * @file parallel.hpp
 * @brief A static-partition parallel loop over an index range.
 */
#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace orthochar {

/** Runs body(i) for i in [0, n) on up to workers threads; rethrows the first failure. */
template <typename F>
void parallel_for(size_t n, int workers, F body) {
  if (workers <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  size_t w = std::min<size_t>(static_cast<size_t>(workers), n);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(w);
  for (size_t t = 0; t < w; ++t) {
    threads.emplace_back([&, t] {
      try {
        for (size_t i = t; i < n; i += w) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace orthochar
