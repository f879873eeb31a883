#pragma once

#include <stdexcept>
#include <string>

namespace loctk {

// Every failure the toolkit can signal, whether a malformed input, a blown
// resource cap, or an internal cross-check that two independent computations
// disagreed (the latter always indicates a bug, never bad input).
enum class Errc {
  not_a_poset,
  not_a_lattice,
  not_distributive,
  not_join_preserving,
  not_meet_preserving,
  endpoint_violation,
  domain_mismatch,
  not_square,
  not_boolean,
  not_directed,
  incoherent_system,
  not_a_point_image,
  invalid_preinterpretation,
  bad_join_entry,
  not_a_ring,
  syntax_error,
  duplicate_name,
  unresolved_reference,
  invalid_declaration,
  resource_cap,
  shadow_mismatch,
  characterization_mismatch,
};

const char* errc_name(Errc c);

class ToolError : public std::runtime_error {
 public:
  ToolError(Errc code, const std::string& msg);
  Errc code() const { return code_; }

  // The message without the leading error name; what() carries both.
  const std::string& detail() const { return detail_; }

  // Process exit code: 2 for bad input, 3 for a resource cap, 1 for a
  // violated law or a failed internal cross-check.
  int exit_code() const;

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

// Caps guarding the combinatorial core.  Exceeding one is a hard error;
// nothing is ever truncated silently.
struct Limits {
  int max_elements = 64;     // frame size for user-level constructions
  int max_coproduct = 4096;  // element count of a coproduct frame
  int max_full_family = 16;  // frame size admitting the exhaustive join family
  int max_points = 64;       // point count of any finite space
};

Limits& limits();

// RAII override used by the test suite and by long-running commands that
// need more room than the interactive defaults.
class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& l) : saved_(limits()) { limits() = l; }
  ~ScopedLimits() { limits() = saved_; }
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

}  // namespace loctk
