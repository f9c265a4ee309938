#include "maxpoint/report.hpp"

#include <ostream>
#include <sstream>

namespace maxpoint {

void Report::verdict(std::string key, bool ok, const std::string& witness) {
  std::string value = ok ? "VERIFIED" : "FAILED";
  if (!ok && !witness.empty()) value += " (" + witness + ")";
  lines_.push_back({std::move(key), std::move(value), ok});
}

void Report::append(const Report& other) {
  lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
}

bool Report::all_ok() const { return first_failure() == nullptr; }

const Obligation* Report::first_failure() const {
  for (const auto& l : lines_) {
    if (!l.ok) return &l;
  }
  return nullptr;
}

void Report::write(std::ostream& out) const {
  if (!title_.empty()) out << "== " << title_ << " ==\n";
  for (const auto& l : lines_) out << l.key << ": " << l.value << '\n';
}

std::string Report::str() const {
  std::ostringstream s;
  write(s);
  return s.str();
}

}  // namespace maxpoint
