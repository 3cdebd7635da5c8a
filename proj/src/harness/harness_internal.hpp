#pragma once

#include <string>

#include "axiomtest/harness.hpp"

namespace axiomtest::detail {

/// Maps a protocol response line to an evaluation outcome.
EvalOutcome parse_response(const std::string& line, const Signature& sig);

}  // namespace axiomtest::detail
