#include "hetcat/validation.hpp"

#include <algorithm>
#include <sstream>

namespace hetcat {

void ValidationReport::sort_canonical() {
  std::sort(items_.begin(), items_.end());
}

std::string ValidationReport::to_string() const {
  if (items_.empty()) return "valid";
  std::ostringstream os;
  os << items_.size() << " violation" << (items_.size() == 1 ? "" : "s") << ":\n";
  for (const auto& v : items_) os << "  [" << v.law << "] " << v.detail << "\n";
  return os.str();
}

}  // namespace hetcat
