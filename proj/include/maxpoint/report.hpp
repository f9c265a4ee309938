#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxpoint {

// One "KEY: VALUE" line of a report. `ok` records whether the line is an
// obligation that held; plain facts are always ok.
struct Obligation {
  std::string key;
  std::string value;
  bool ok = true;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  void fact(std::string key, std::string value) { lines_.push_back({std::move(key), std::move(value), true}); }

  // VERIFIED, or FAILED followed by the witness.
  void verdict(std::string key, bool ok, const std::string& witness = {});

  void skipped(std::string key, const std::string& reason) {
    lines_.push_back({std::move(key), "SKIPPED (" + reason + ")", false});
  }

  void append(const Report& other);

  const std::string& title() const { return title_; }
  const std::vector<Obligation>& lines() const { return lines_; }
  bool all_ok() const;
  const Obligation* first_failure() const;

  // Title line (when set) then one line per obligation.
  void write(std::ostream& out) const;
  std::string str() const;

 private:
  std::string title_;
  std::vector<Obligation> lines_;
};

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace maxpoint
