#pragma once

#include <set>
#include <string>

namespace agr {

// Item ids built from other ids escape separators so distinct component
// tuples never collide.
std::string escape_id_component(const std::string& s);

// Deterministically picks an id not contained in `taken` by appending primes.
std::string fresh_id(std::string base, const std::set<std::string>& taken);

} // namespace agr
