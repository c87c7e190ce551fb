#pragma once
#include <string>
#include <vector>

#include "ho3/matrix.hpp"

namespace ho3 {

struct Violation {
  std::string check;
  std::vector<int> where;
  std::string detail;
};

// outcome of a validator run. axiom failures accumulate here; at most
// kMaxPerCheck witnesses are kept per check id, the rest are counted.
struct ValidationReport {
  static constexpr int kMaxPerCheck = 6;

  std::vector<Violation> violations;
  std::vector<std::string> notes;  // e.g. identities that hold by construction

  bool ok() const { return violations.empty(); }
  void merge(const ValidationReport& other);
  void note(const std::string& text);
  void fail(const std::string& check, std::vector<int> where, const std::string& detail);
  // records a violation when lhs != rhs
  void check_vec_eq(const std::string& check, std::vector<int> where, const Vec& lhs,
                    const Vec& rhs);
  std::string summary() const;

 private:
  std::vector<std::pair<std::string, int>> counts_;
  int count_for(const std::string& check);
};

std::string vec_str(const Vec& v);

}  // namespace ho3
