#ifndef HETCAT_VALIDATION_HPP
#define HETCAT_VALIDATION_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace hetcat {

/// One law violation. `key` orders violations canonically so reports are
/// byte-stable regardless of scan parallelism.
struct Violation {
  std::string law;     // e.g. "identity-law", "associativity", "typing"
  std::string detail;  // human-readable, uses structure names
  std::array<std::uint64_t, 4> key{0, 0, 0, 0};

  friend bool operator<(const Violation& a, const Violation& b) {
    if (a.law != b.law) return a.law < b.law;
    return a.key < b.key;
  }
};

class ValidationReport {
 public:
  bool ok() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const std::vector<Violation>& items() const { return items_; }

  void add(Violation v) { items_.push_back(std::move(v)); }
  void merge(ValidationReport other) {
    for (auto& v : other.items_) items_.push_back(std::move(v));
  }
  void sort_canonical();

  std::string to_string() const;

 private:
  std::vector<Violation> items_;
};

}  // namespace hetcat

#endif
