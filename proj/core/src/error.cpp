#include "endochain/error.hpp"

namespace endochain {

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::length_mismatch: return "length_mismatch";
    case errc::out_of_range: return "out_of_range";
    case errc::not_monotone: return "not_monotone";
    case errc::chain_mismatch: return "chain_mismatch";
    case errc::bad_anchors: return "bad_anchors";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::not_a_subset: return "not_a_subset";
    case errc::not_invariant: return "not_invariant";
    case errc::domain_mismatch: return "domain_mismatch";
    case errc::domain_not_closed: return "domain_not_closed";
    case errc::escapes_ambient: return "escapes_ambient";
    case errc::not_a_derivation: return "not_a_derivation";
    case errc::not_in_string: return "not_in_string";
    case errc::unknown_claim: return "unknown_claim";
    case errc::bad_params: return "bad_params";
    case errc::spec_resolution: return "spec_resolution";
    case errc::bad_format: return "bad_format";
  }
  return "unknown_error";
}

}  // namespace endochain
