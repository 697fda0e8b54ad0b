#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "severi/extension.hpp"

namespace severi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

/// shanks:t=T | poly:"f";galois:"g"[;p=P] | finite:p=P. `n` fixes the degree
/// n+1 of finite fields and must agree with the degree of the others.
/// Throws ParseError or the construction's error code.
Extension parse_field_spec(const std::string& spec, std::optional<int> n);

/// SEVERI_SEED when set, else the given value. Throws ParseError.
std::uint64_t effective_seed(std::uint64_t flag_value);

/// Runs one invocation (args exclude the program name). Output goes to `out`
/// only after the whole command succeeded, or to --output when given;
/// diagnostics go to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace severi::cli
