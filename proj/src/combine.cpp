#include "logicfuse/combine.hpp"

#include <algorithm>
#include <stdexcept>

namespace logicfuse {

namespace {

std::vector<std::string> sig_tokens(const Signature& s) {
    std::vector<std::string> out;
    for (const auto& c : s.constructors()) out.push_back(c.token() + "/" + std::to_string(c.arity));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

GentzenCalculus combine_calculus(const GentzenCalculus& host, const Combination& comb) {
    if (sig_tokens(host.signature()) != sig_tokens(comb.renamed.host))
        throw std::invalid_argument("combine_calculus: host calculus is over a different signature");

    const bool single = host.mode() == SuccedentMode::Single;
    std::vector<RuleSchema> schemas = host.schemas();

    const ContextVar gamma{"G", std::nullopt};
    const ContextVar delta{"D", std::nullopt};

    // Wraps a principal pattern / its unfolding into the left or right
    // rule shape of the host's succedent discipline.
    auto left_rule = [&](std::string name, Formula unfolded, Formula principal) {
        RuleSchema r;
        r.name = std::move(name);
        SequentPattern prem, concl;
        prem.left.elems = {std::move(unfolded)};
        prem.left.ctxs = {gamma};
        concl.left.elems = {std::move(principal)};
        concl.left.ctxs = {gamma};
        if (single) {
            prem.right.elems = {Formula::meta("b")};
            concl.right.elems = {Formula::meta("b")};
        } else {
            prem.right.ctxs = {delta};
            concl.right.ctxs = {delta};
        }
        r.premises = {std::move(prem)};
        r.conclusion = std::move(concl);
        return r;
    };
    auto right_rule = [&](std::string name, Formula unfolded, Formula principal) {
        RuleSchema r;
        r.name = std::move(name);
        SequentPattern prem, concl;
        prem.left.ctxs = {gamma};
        concl.left.ctxs = {gamma};
        if (!single) {
            prem.right.ctxs = {delta};
            concl.right.ctxs = {delta};
        }
        prem.right.elems.push_back(std::move(unfolded));
        concl.right.elems.push_back(std::move(principal));
        r.premises = {std::move(prem)};
        r.conclusion = std::move(concl);
        return r;
    };

    if (!comb.props_identified) {
        const LogicTag& src_tag = comb.renamed.source.prop_tag();
        Formula hole = Formula::prop_var("p");
        Formula image = apply_term_with_hole(comb.renamed.prop_template, {}, hole);
        Formula principal = Formula::source_prop_var("p", src_tag);
        schemas.push_back(left_rule("L_P." + src_tag, image, principal));
        schemas.push_back(right_rule("R_P." + src_tag, image, principal));
    }

    for (const auto& c : comb.renamed.source.constructors()) {
        if (comb.renamed.host.contains(c)) continue;  // identified with a host constructor
        std::vector<Formula> metas;
        for (int i = 1; i <= c.arity; ++i) metas.push_back(Formula::meta("b" + std::to_string(i)));
        const MapTerm* m = comb.renamed.image_of(c);
        if (!m) throw std::invalid_argument("combine_calculus: no image for " + c.token());
        Formula unfolded = apply_term(*m, metas);
        Formula principal = Formula::app(c, metas);
        schemas.push_back(left_rule("L_" + c.token(), unfolded, principal));
        schemas.push_back(right_rule("R_" + c.token(), std::move(unfolded), std::move(principal)));
    }

    return GentzenCalculus(comb.name, comb.combined, host.mode(), std::move(schemas));
}

}  // namespace logicfuse
