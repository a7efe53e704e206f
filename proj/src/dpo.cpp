#include "agr/dpo.hpp"

namespace agr {

void Production::check() const {
    if (!(phi_l.dom() == interface) || !(phi_l.cod() == left) ||
        !(phi_r.dom() == interface) || !(phi_r.cod() == right))
        throw std::invalid_argument("production: leg endpoints do not match");
    if (!phi_l.check().empty() || !phi_r.check().empty())
        throw std::invalid_argument("production: leg is not a morphism");
    if (!is_mono(phi_l) || !is_mono(phi_r))
        throw std::invalid_argument("production: legs must be monos");
}

Production Production::reversed() const {
    return {right, interface, left, phi_r, phi_l};
}

std::vector<GraphMorphism> find_matches(const Production& p, const Graph& x) {
    return enumerate_monos(p.left, x);
}

std::optional<DpoTrace> dpo_step(const Production& p, const GraphMorphism& match) {
    p.check();
    if (!(match.dom() == p.left)) throw std::invalid_argument("dpo_step: match domain is not L");
    if (!is_mono(match)) throw std::invalid_argument("dpo_step: match must be mono");

    auto poc = pushout_complement(p.phi_l, match);
    if (!poc) return std::nullopt;

    CospanResult po = pushout(poc->to_context, p.phi_r);
    return DpoTrace{match,    poc->context, poc->to_context, poc->inclusion,
                    po.apex,  po.right,     po.left};
}

} // namespace agr
