#include "ho3/report.hpp"

#include <sstream>

namespace ho3 {

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << f_str(v[i]);
  }
  os << ")";
  return os.str();
}

int ValidationReport::count_for(const std::string& check) {
  for (auto& [name, n] : counts_)
    if (name == check) return ++n;
  counts_.emplace_back(check, 1);
  return 1;
}

void ValidationReport::merge(const ValidationReport& other) {
  for (const auto& v : other.violations) fail(v.check, v.where, v.detail);
  for (const auto& n : other.notes) notes.push_back(n);
}

void ValidationReport::note(const std::string& text) { notes.push_back(text); }

void ValidationReport::fail(const std::string& check, std::vector<int> where,
                            const std::string& detail) {
  const int n = count_for(check);
  if (n > kMaxPerCheck) return;
  if (n == kMaxPerCheck) {
    violations.push_back({check, {}, "further witnesses suppressed"});
    return;
  }
  violations.push_back({check, std::move(where), detail});
}

void ValidationReport::check_vec_eq(const std::string& check, std::vector<int> where,
                                    const Vec& lhs, const Vec& rhs) {
  if (vec_eq(lhs, rhs)) return;
  fail(check, std::move(where), "lhs=" + vec_str(lhs) + " rhs=" + vec_str(rhs));
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  if (ok()) {
    os << "ok";
  } else {
    os << violations.size() << " violation(s):";
    for (const auto& v : violations) {
      os << "\n  " << v.check;
      if (!v.where.empty()) {
        os << " at [";
        for (size_t i = 0; i < v.where.size(); ++i) {
          if (i) os << ",";
          os << v.where[i];
        }
        os << "]";
      }
      if (!v.detail.empty()) os << " " << v.detail;
    }
  }
  for (const auto& n : notes) os << "\n  note: " << n;
  return os.str();
}

}  // namespace ho3
