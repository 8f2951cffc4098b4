#pragma once

#include <string>
#include <string_view>

namespace vghjudge {

// Canonical form shared by ontology lemmas, hierarchy terms and the
// nominalization table: ASCII-lowercased, '_' treated as a space,
// whitespace runs collapsed to one space, no leading/trailing space.
std::string normalize_term(std::string_view raw);

// Rounds to four decimals, ties away from zero.
double round4(double x);

// Renders with exactly four decimals under round4.
std::string fixed4(double x);

}  // namespace vghjudge
