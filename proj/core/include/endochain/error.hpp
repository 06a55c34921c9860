#ifndef ENDOCHAIN_ERROR_HPP
#define ENDOCHAIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace endochain {

enum class errc {
  length_mismatch,
  out_of_range,
  not_monotone,
  chain_mismatch,
  bad_anchors,
  index_out_of_range,
  not_a_subset,
  not_invariant,
  domain_mismatch,
  domain_not_closed,
  escapes_ambient,
  not_a_derivation,
  not_in_string,
  unknown_claim,
  bad_params,
  spec_resolution,
  bad_format,
};

const char* to_string(errc code) noexcept;

/// Library-wide exception; carries a machine-checkable error code.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw error(code, message);
}

inline void require(bool condition, errc code, const std::string& message) {
  if (!condition) raise(code, message);
}

}  // namespace endochain

#endif
