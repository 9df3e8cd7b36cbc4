#ifndef QDEFORM_CHECK_HPP
#define QDEFORM_CHECK_HPP

#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace qdeform {

/// A concrete counterexample: the basis tuple that was tried and both sides.
struct Witness {
  std::string input;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one verification sweep.
struct CheckResult {
  std::string name;
  bool passed = true;
  int bound = -1;  // sweep degree bound; -1 when the check is not degree-parameterized
  std::string note;
  std::optional<Witness> witness;

  explicit operator bool() const { return passed; }

  static CheckResult pass(std::string name, int bound = -1) {
    CheckResult r;
    r.name = std::move(name);
    r.bound = bound;
    return r;
  }

  static CheckResult fail(std::string name, Witness w, int bound = -1) {
    CheckResult r;
    r.name = std::move(name);
    r.passed = false;
    r.bound = bound;
    r.witness = std::move(w);
    return r;
  }

  static CheckResult fail_note(std::string name, std::string note, int bound = -1) {
    CheckResult r;
    r.name = std::move(name);
    r.passed = false;
    r.bound = bound;
    r.note = std::move(note);
    return r;
  }

  /// Renames the result while keeping status and witness.
  CheckResult& as(std::string new_name) & {
    name = std::move(new_name);
    return *this;
  }
  CheckResult&& as(std::string new_name) && {
    name = std::move(new_name);
    return std::move(*this);
  }
};

inline std::ostream& operator<<(std::ostream& os, const CheckResult& r) {
  os << (r.passed ? "PASS " : "FAIL ") << r.name;
  if (r.bound >= 0) os << " [degree <= " << r.bound << "]";
  if (!r.note.empty()) os << " (" << r.note << ")";
  if (r.witness) {
    os << "\n  witness: " << r.witness->input << "\n  lhs: " << r.witness->lhs << "\n  rhs: " << r.witness->rhs;
  }
  return os;
}

}  // namespace qdeform

#endif  // QDEFORM_CHECK_HPP
