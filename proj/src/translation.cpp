#include "logicfuse/translation.hpp"

#include <algorithm>
#include <stdexcept>

namespace logicfuse {

const MapTerm* ConstructorTranslation::image_of(const Constructor& c) const {
    for (const auto& [k, v] : ctor_map)
        if (k == c) return &v;
    return nullptr;
}

MapTerm ConstructorTranslation::prop_image(uint32_t k) const {
    return substitute_hole(prop_template, prop_bijection(k));
}

bool ConstructorTranslation::props_shared() const {
    return prop_template.kind() == MapTerm::Kind::Hole;
}

std::vector<Violation> validate_translation(const ConstructorTranslation& t) {
    std::vector<Violation> out;
    for (size_t i = 0; i < t.ctor_map.size(); ++i) {
        const auto& [c, m] = t.ctor_map[i];
        if (m.arity() != c.arity)
            out.push_back({2, c.token() + " has arity " + std::to_string(c.arity) +
                                  " but its image takes " + std::to_string(m.arity()) +
                                  " argument(s)"});
        if (c.arity == 0) {
            bool lifted_zeroary = m.kind() == MapTerm::Kind::Lift && m.lifted().arity == 0 &&
                                  t.host.contains(m.lifted());
            if (!lifted_zeroary)
                out.push_back({4, c.token() + " is 0-ary but its image is not a lifted 0-ary "
                                             "host constructor"});
        }
        for (size_t j = i + 1; j < t.ctor_map.size(); ++j) {
            if (m == t.ctor_map[j].second)
                out.push_back({1, "images of " + c.token() + " and " +
                                      t.ctor_map[j].first.token() + " coincide"});
        }
        for (const auto& lc : lifted_constructors(m)) {
            if (!t.host.contains(lc))
                out.push_back({2, "image of " + c.token() + " lifts " + lc.token() +
                                      " which is not in the host signature"});
        }
        if (contains_hole(m))
            out.push_back({2, "image of " + c.token() + " contains the prop-template hole"});
    }
    for (const auto& [c, m] : t.ctor_map) {
        if (!t.source.contains(c))
            out.push_back({2, c.token() + " is not in the source signature"});
    }
    for (const auto& c : t.source.constructors()) {
        if (!t.image_of(c)) out.push_back({2, "no image declared for " + c.token()});
    }
    if (t.prop_template.arity() != 0)
        out.push_back({3, "prop template takes arguments"});
    if (!contains_hole(t.prop_template))
        out.push_back({5, "the hole does not occur in the prop template"});
    return out;
}

Formula translate(const ConstructorTranslation& t, const Formula& f) {
    switch (f.kind()) {
        case FKind::Prop: {
            MapTerm m = t.prop_image(f.prop_index());
            return apply_term(m, {});
        }
        case FKind::App: {
            const MapTerm* m = t.image_of(f.ctor());
            if (!m)
                throw std::invalid_argument("translate: " + f.ctor().token() +
                                            " is outside the source signature");
            std::vector<Formula> kids;
            kids.reserve(f.children().size());
            for (const auto& k : f.children()) kids.push_back(translate(t, k));
            return apply_term(*m, kids);
        }
        default:
            throw std::invalid_argument("translate: formula is not ground");
    }
}

uint64_t translate_hash(const ConstructorTranslation& t, const Formula& f) {
    switch (f.kind()) {
        case FKind::Prop: {
            MapTerm m = t.prop_image(f.prop_index());
            return apply_term_hash(m, std::span<const uint64_t>{});
        }
        case FKind::App: {
            const MapTerm* m = t.image_of(f.ctor());
            if (!m)
                throw std::invalid_argument("translate: " + f.ctor().token() +
                                            " is outside the source signature");
            std::vector<uint64_t> kids;
            kids.reserve(f.children().size());
            for (const auto& k : f.children()) kids.push_back(translate_hash(t, k));
            return apply_term_hash(*m, std::span<const uint64_t>(kids));
        }
        default:
            throw std::invalid_argument("translate: formula is not ground");
    }
}

namespace {

Constructor rename_ctor(const Constructor& c,
                        const std::vector<std::pair<Constructor, Constructor>>& to_shared) {
    for (const auto& [orig, shared] : to_shared)
        if (c == orig) return shared;
    return c;
}

MapTerm rename_in_term(const MapTerm& m,
                       const std::vector<std::pair<Constructor, Constructor>>& to_shared) {
    switch (m.kind()) {
        case MapTerm::Kind::Lift:
            return MapTerm::lift(rename_ctor(m.lifted(), to_shared));
        case MapTerm::Kind::Agg: {
            std::vector<MapTerm> kids;
            kids.reserve(m.agg_children().size());
            for (const auto& k : m.agg_children()) kids.push_back(rename_in_term(k, to_shared));
            return MapTerm::agg(std::move(kids));
        }
        case MapTerm::Kind::Comp:
            return MapTerm::comp(rename_in_term(m.comp_outer(), to_shared),
                                 rename_in_term(m.comp_inner(), to_shared));
        default:
            return m;
    }
}

}  // namespace

Result<Combination> identify_common(const ConstructorTranslation& t, std::string combined_name) {
    Combination comb;
    comb.name = combined_name;

    // Pairs c'' ~ c' with image c'-lifted; a host constructor may absorb
    // at most one source constructor (injectivity makes a second pairing
    // impossible, but report it rather than assume).
    std::vector<std::pair<Constructor, Constructor>> pairs;
    for (const auto& [c, m] : t.ctor_map) {
        if (m.kind() != MapTerm::Kind::Lift) continue;
        const Constructor& h = m.lifted();
        for (const auto& [c2, h2] : pairs) {
            if (h2 == h)
                return SyntaxError{0, "merge conflict: " + c.token() + " and " + c2.token() +
                                          " both identify with " + h.token()};
        }
        pairs.emplace_back(c, h);
    }
    comb.identified = pairs;
    comb.props_identified = t.props_shared();

    std::vector<std::pair<Constructor, Constructor>> src_ren, host_ren;
    for (const auto& [c, h] : pairs) {
        Constructor shared{h.base, "", h.arity};
        src_ren.emplace_back(c, shared);
        host_ren.emplace_back(h, shared);
    }

    auto rename_sig = [](const Signature& sig, const std::string& name, const LogicTag& prop_tag,
                         const std::vector<std::pair<Constructor, Constructor>>& ren) {
        std::vector<Constructor> ctors;
        ctors.reserve(sig.constructors().size());
        for (const auto& c : sig.constructors()) ctors.push_back(rename_ctor(c, ren));
        return Signature(name, prop_tag, std::move(ctors), sig.sourceprop_tags());
    };

    const LogicTag shared_prop_tag = comb.props_identified ? LogicTag{} : t.source.prop_tag();
    const LogicTag host_prop_tag = comb.props_identified ? LogicTag{} : t.host.prop_tag();

    ConstructorTranslation rt;
    rt.name = t.name;
    rt.source = rename_sig(t.source, t.source.name(), shared_prop_tag, src_ren);
    rt.host = rename_sig(t.host, t.host.name(), host_prop_tag, host_ren);
    for (const auto& [c, m] : t.ctor_map)
        rt.ctor_map.emplace_back(rename_ctor(c, src_ren), rename_in_term(m, host_ren));
    rt.prop_template = rename_in_term(t.prop_template, host_ren);
    rt.prop_bijection = t.prop_bijection;
    comb.renamed = std::move(rt);

    // Combined signature: host constructors first, then source-only ones;
    // shared constructors appear once. Surviving source props become a
    // 0-ary family.
    std::vector<Constructor> ctors = comb.renamed.host.constructors();
    for (const auto& c : comb.renamed.source.constructors()) {
        if (std::find(ctors.begin(), ctors.end(), c) == ctors.end()) ctors.push_back(c);
    }
    std::vector<LogicTag> sourceprops;
    if (!comb.props_identified) sourceprops.push_back(comb.renamed.source.prop_tag());
    comb.combined =
        Signature(std::move(combined_name), host_prop_tag, std::move(ctors), sourceprops);
    return comb;
}

Formula flatten(const Combination& comb, const Formula& f) {
    switch (f.kind()) {
        case FKind::Prop:
            return f;
        case FKind::App: {
            const Constructor& c = f.ctor();
            if (c.arity == 0 && !c.tag.empty() && is_prop_base(c.base) &&
                comb.combined.has_sourceprops(c.tag)) {
                MapTerm m = comb.renamed.prop_image(*prop_base_index(c.base));
                return apply_term(m, {});
            }
            if (comb.renamed.host.contains(c)) {
                std::vector<Formula> kids;
                kids.reserve(f.children().size());
                for (const auto& k : f.children()) kids.push_back(flatten(comb, k));
                return Formula::app(c, std::move(kids));
            }
            const MapTerm* m = comb.renamed.image_of(c);
            if (!m)
                throw std::invalid_argument("flatten: " + c.token() +
                                            " is outside the combined signature");
            std::vector<Formula> kids;
            kids.reserve(f.children().size());
            for (const auto& k : f.children()) kids.push_back(flatten(comb, k));
            return apply_term(*m, kids);
        }
        default:
            throw std::invalid_argument("flatten: formula is not ground");
    }
}

uint64_t flatten_hash(const Combination& comb, const Formula& f) {
    switch (f.kind()) {
        case FKind::Prop:
            return f.hash();
        case FKind::App: {
            const Constructor& c = f.ctor();
            if (c.arity == 0 && !c.tag.empty() && is_prop_base(c.base) &&
                comb.combined.has_sourceprops(c.tag)) {
                MapTerm m = comb.renamed.prop_image(*prop_base_index(c.base));
                return apply_term_hash(m, std::span<const uint64_t>{});
            }
            std::vector<uint64_t> kids;
            kids.reserve(f.children().size());
            for (const auto& k : f.children()) kids.push_back(flatten_hash(comb, k));
            if (comb.renamed.host.contains(c)) return formula_app_hash(c, kids);
            const MapTerm* m = comb.renamed.image_of(c);
            if (!m)
                throw std::invalid_argument("flatten: " + c.token() +
                                            " is outside the combined signature");
            return apply_term_hash(*m, std::span<const uint64_t>(kids));
        }
        default:
            throw std::invalid_argument("flatten: formula is not ground");
    }
}

}  // namespace logicfuse
