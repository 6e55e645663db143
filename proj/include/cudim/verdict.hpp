#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cudim {

enum class VerdictStatus { refuted, verified_up_to, certified, declined };

inline std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::refuted: return "refuted";
    case VerdictStatus::verified_up_to: return "verified-up-to";
    case VerdictStatus::certified: return "certified";
    case VerdictStatus::declined: return "not-certified";
  }
  return "unknown";
}

/// Outcome of a check that may only be bounded.
///
/// `refuted` carries the failing instance in `tuple`; `exact` says whether
/// the refutation holds outright or only relative to the search space.
/// `declined` is a certificate whose sufficient condition failed at `tuple`.
template <class E>
struct BoundedVerdict {
  VerdictStatus status = VerdictStatus::verified_up_to;
  std::vector<E> tuple;
  std::string reason;
  bool exact = false;
  std::size_t depth = 0;
  std::size_t slack = 0;
  std::size_t r_max = 0;
  std::size_t instances = 0;

  bool ok() const noexcept {
    return status == VerdictStatus::verified_up_to ||
           status == VerdictStatus::certified;
  }
};

}  // namespace cudim
