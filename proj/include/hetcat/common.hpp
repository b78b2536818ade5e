#ifndef HETCAT_COMMON_HPP
#define HETCAT_COMMON_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hetcat {

inline constexpr std::uint32_t kNone = 0xFFFFFFFFu;

/// Index of an object within its category. Canonical order is insertion
/// order, which is stable across runs.
struct ObjId {
  std::uint32_t v = kNone;
  constexpr ObjId() = default;
  constexpr explicit ObjId(std::uint32_t i) : v(i) {}
  constexpr bool valid() const { return v != kNone; }
  friend constexpr auto operator<=>(ObjId, ObjId) = default;
};

/// Index of a morphism within its category.
struct MorId {
  std::uint32_t v = kNone;
  constexpr MorId() = default;
  constexpr explicit MorId(std::uint32_t i) : v(i) {}
  constexpr bool valid() const { return v != kNone; }
  friend constexpr auto operator<=>(MorId, MorId) = default;
};

/// Index of a het element within its bifunctor (global across blocks;
/// blocks are kept disjoint by construction).
struct HetId {
  std::uint32_t v = kNone;
  constexpr HetId() = default;
  constexpr explicit HetId(std::uint32_t i) : v(i) {}
  constexpr bool valid() const { return v != kNone; }
  friend constexpr auto operator<=>(HetId, HetId) = default;
};

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Unknown name or id.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Composition requested on a non-composable pair (endpoint mismatch).
class ComposabilityError : public Error {
 public:
  using Error::Error;
};

/// Shape mismatch between structures (wrong categories, missing component).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A search exceeded its configured budget. Never silently truncate.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::size_t needed, std::size_t limit)
      : Error(what), needed(needed), limit(limit) {}
  std::size_t needed;
  std::size_t limit;
};

/// An element failed to factor uniquely through a claimed universal.
class NotUniversalError : public Error {
 public:
  using Error::Error;
};

/// Derived data failed a law that valid inputs guarantee; indicates a bug
/// or an invalid witness set.
class InternalInconsistencyError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Runtime knobs

struct RunOptions {
  unsigned threads = 0;      // 0 = resolve from env / hardware
  std::size_t budget = 0;    // 0 = resolve from env / default
  bool early_exit = false;   // stop validation at first violation
};

unsigned resolve_threads(unsigned requested);
std::size_t resolve_budget(std::size_t requested);

/// Splits [0, n) into chunks and runs body(chunk_index, begin, end) on each,
/// possibly concurrently. Chunk boundaries depend only on n and the resolved
/// thread count, and callers merge per-chunk results in chunk order, so
/// output is identical at any parallelism level.
void parallel_chunks(std::size_t n, unsigned threads,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& body);

std::string env_or(const char* name, const std::string& fallback);

}  // namespace hetcat

#endif
