#pragma once

#include <ostream>
#include <string>

#include "racg/embedding.hpp"

namespace racg {

inline constexpr const char* kToolVersion = "0.1.0";

/// Certificate body as JSON text: keys sorted, big integers and rationals as
/// strings, no timing data. Identical inputs give identical bytes.
std::string certificate_json(const EmbeddingCertificate& c);

/// Entry point of the `racg` tool. Exit codes: 0 every check passed, 1 a
/// mathematical check failed, 2 input or usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace racg
