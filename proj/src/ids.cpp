#include "agr/ids.hpp"

namespace agr {

std::string escape_id_component(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\\' || c == ',' || c == '(' || c == ')') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string fresh_id(std::string base, const std::set<std::string>& taken) {
    while (taken.count(base)) base.push_back('\'');
    return base;
}

} // namespace agr
