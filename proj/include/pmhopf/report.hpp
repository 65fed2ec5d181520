#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "pmhopf/freemodule.hpp"

namespace pmhopf {

/// Outcome of checking one identity over a family of inputs.
struct CheckReport {
  CheckReport() = default;
  CheckReport(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string counterexample; // first failure, if any
  bool ok() const { return failures == 0; }

  template <class T>
  void record(const std::string &where, const T &lhs, const T &rhs) {
    ++checked;
    if (!(lhs == rhs) && failures++ == 0)
      counterexample = where + ": " + to_text(lhs) + " vs " + to_text(rhs);
  }
};

} // namespace pmhopf
