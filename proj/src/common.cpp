#include "hetcat/common.hpp"

#include <cstdlib>
#include <thread>

namespace hetcat {

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  std::string e = env_or("HETCAT_THREADS", "");
  if (!e.empty()) {
    long n = std::strtol(e.c_str(), nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

std::size_t resolve_budget(std::size_t requested) {
  if (requested > 0) return requested;
  std::string e = env_or("HETCAT_BUDGET", "");
  if (!e.empty()) {
    long long n = std::strtoll(e.c_str(), nullptr, 10);
    if (n > 0) return static_cast<std::size_t>(n);
  }
  return 10'000'000;
}

void parallel_chunks(std::size_t n, unsigned threads,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& body) {
  unsigned t = resolve_threads(threads);
  if (t <= 1 || n < 2048) {
    body(0, 0, n);
    return;
  }
  if (t > n) t = static_cast<unsigned>(n);
  std::vector<std::thread> workers;
  workers.reserve(t);
  std::size_t chunk = (n + t - 1) / t;
  for (unsigned i = 0; i < t; ++i) {
    std::size_t begin = static_cast<std::size_t>(i) * chunk;
    std::size_t end = begin + chunk < n ? begin + chunk : n;
    if (begin >= end) break;
    workers.emplace_back([&, i, begin, end] { body(i, begin, end); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace hetcat
