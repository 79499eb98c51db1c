#pragma once

#include <cstdint>
#include <string>

namespace scw {

/// Evaluates a budget expression against instance parameters. Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := primary ('^' primary)?
///   primary := integer | 'n' | 'm' | 'k' | '(' expr ')'
/// e.g. "50*m*n^2", "100*n^(k+3)". The result must be a positive
/// integer that fits 62 bits; anything else throws std::invalid_argument.
std::uint64_t eval_budget_expr(const std::string& expr, long long n, long long m, long long k);

}  // namespace scw
