#include "logicfuse/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace logicfuse {

namespace {
constexpr uint64_t kSeedProp = 0x70726f70ull;
constexpr uint64_t kSeedApp = 0x617070ull;
constexpr uint64_t kSeedMeta = 0x6d657461ull;
constexpr uint64_t kSeedPropVar = 0x70766172ull;
constexpr uint64_t kSeedSrcPropVar = 0x73766172ull;
}  // namespace

bool is_prop_base(std::string_view base) {
    return prop_base_index(base).has_value();
}

std::optional<uint32_t> prop_base_index(std::string_view base) {
    if (base.size() < 2 || base[0] != 'p') return std::nullopt;
    if (base[1] == '0') return std::nullopt;
    uint64_t k = 0;
    for (size_t i = 1; i < base.size(); ++i) {
        if (base[i] < '0' || base[i] > '9') return std::nullopt;
        k = k * 10 + static_cast<uint64_t>(base[i] - '0');
        if (k > 0xffffffffull) return std::nullopt;
    }
    return static_cast<uint32_t>(k);
}

Signature::Signature(std::string name, LogicTag prop_tag, std::vector<Constructor> ctors,
                     std::vector<LogicTag> sourceprop_tags)
    : name_(std::move(name)),
      prop_tag_(std::move(prop_tag)),
      ctors_(std::move(ctors)),
      sourceprop_tags_(std::move(sourceprop_tags)) {
    for (size_t i = 0; i < ctors_.size(); ++i) {
        if (is_prop_base(ctors_[i].base) && ctors_[i].tag.empty())
            throw std::invalid_argument("constructor base collides with prop symbols: " +
                                        ctors_[i].token());
        for (size_t j = i + 1; j < ctors_.size(); ++j) {
            if (ctors_[i].base == ctors_[j].base && ctors_[i].tag == ctors_[j].tag)
                throw std::invalid_argument("duplicate constructor: " + ctors_[i].token());
        }
    }
}

std::optional<Constructor> Signature::find(std::string_view token) const {
    std::string_view base = token, tag;
    if (auto dot = token.find('.'); dot != std::string_view::npos) {
        base = token.substr(0, dot);
        tag = token.substr(dot + 1);
    }
    for (const auto& c : ctors_) {
        if (c.base == base && c.tag == tag) return c;
    }
    if (!tag.empty() && is_prop_base(base) && has_sourceprops(LogicTag(tag)))
        return Constructor{std::string(base), LogicTag(tag), 0};
    return std::nullopt;
}

std::optional<Constructor> Signature::find_unique_base(std::string_view base) const {
    const Constructor* found = nullptr;
    for (const auto& c : ctors_) {
        if (c.base != base) continue;
        if (found) return std::nullopt;  // ambiguous
        found = &c;
    }
    if (!found) return std::nullopt;
    return *found;
}

bool Signature::has_sourceprops(const LogicTag& tag) const {
    return std::find(sourceprop_tags_.begin(), sourceprop_tags_.end(), tag) !=
           sourceprop_tags_.end();
}

bool Signature::contains(const Constructor& c) const {
    for (const auto& d : ctors_) {
        if (d == c) return true;
    }
    return c.arity == 0 && !c.tag.empty() && is_prop_base(c.base) && has_sourceprops(c.tag);
}

std::vector<Constructor> Signature::zeroary() const {
    std::vector<Constructor> out;
    for (const auto& c : ctors_)
        if (c.arity == 0) out.push_back(c);
    return out;
}

struct Formula::Node {
    FKind kind;
    uint32_t index = 0;     // Prop
    Constructor ctor;       // App
    std::string name;       // variables
    LogicTag vtag;          // SourcePropVar
    std::vector<Formula> kids;
    uint64_t hash = 0;
    int depth = 0;
    bool ground = true;
};

uint64_t formula_prop_hash(uint32_t index) { return hash_combine(kSeedProp, index); }

uint64_t formula_app_hash(const Constructor& c, std::span<const uint64_t> child_hashes) {
    uint64_t h = hash_combine(kSeedApp, hash_string(c.token()));
    for (uint64_t kh : child_hashes) h = hash_combine(h, kh);
    return h;
}

Formula Formula::prop(uint32_t index) {
    auto n = std::make_shared<Node>();
    n->kind = FKind::Prop;
    n->index = index;
    n->hash = formula_prop_hash(index);
    return Formula(std::move(n));
}

Formula Formula::app(Constructor c, std::vector<Formula> children) {
    if (static_cast<int>(children.size()) != c.arity)
        throw std::invalid_argument("arity mismatch applying " + c.token());
    auto n = std::make_shared<Node>();
    n->kind = FKind::App;
    std::vector<uint64_t> kh;
    kh.reserve(children.size());
    int d = 0;
    bool g = true;
    for (const auto& k : children) {
        kh.push_back(k.hash());
        d = std::max(d, k.depth() + 1);
        g = g && k.is_ground();
    }
    n->hash = formula_app_hash(c, kh);
    n->depth = d;
    n->ground = g;
    n->ctor = std::move(c);
    n->kids = std::move(children);
    return Formula(std::move(n));
}

Formula Formula::meta(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = FKind::MetaVar;
    n->hash = hash_combine(kSeedMeta, hash_string(name));
    n->name = std::move(name);
    n->ground = false;
    return Formula(std::move(n));
}

Formula Formula::prop_var(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = FKind::PropVar;
    n->hash = hash_combine(kSeedPropVar, hash_string(name));
    n->name = std::move(name);
    n->ground = false;
    return Formula(std::move(n));
}

Formula Formula::source_prop_var(std::string name, LogicTag tag) {
    auto n = std::make_shared<Node>();
    n->kind = FKind::SourcePropVar;
    n->hash = hash_combine(hash_combine(kSeedSrcPropVar, hash_string(name)), hash_string(tag));
    n->name = std::move(name);
    n->vtag = std::move(tag);
    n->ground = false;
    return Formula(std::move(n));
}

Formula Formula::source_prop(uint32_t index, const LogicTag& tag) {
    return app(Constructor{"p" + std::to_string(index), tag, 0});
}

FKind Formula::kind() const { return node_->kind; }
uint32_t Formula::prop_index() const { return node_->index; }
const Constructor& Formula::ctor() const { return node_->ctor; }
const std::vector<Formula>& Formula::children() const { return node_->kids; }
const std::string& Formula::var_name() const { return node_->name; }
const LogicTag& Formula::var_tag() const { return node_->vtag; }
uint64_t Formula::hash() const { return node_->hash; }
int Formula::depth() const { return node_->depth; }
bool Formula::is_ground() const { return node_->ground; }

bool Formula::operator==(const Formula& o) const {
    if (node_ == o.node_) return true;
    if (!node_ || !o.node_) return false;
    if (node_->hash != o.node_->hash) return false;
    return compare(*this, o) == 0;
}

int compare(const Formula& a, const Formula& b) {
    if (a.kind() != b.kind())
        return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    switch (a.kind()) {
        case FKind::Prop:
            if (a.prop_index() != b.prop_index()) return a.prop_index() < b.prop_index() ? -1 : 1;
            return 0;
        case FKind::App: {
            const auto ta = a.ctor().token(), tb = b.ctor().token();
            if (int c = ta.compare(tb); c != 0) return c < 0 ? -1 : 1;
            const auto& ka = a.children();
            const auto& kb = b.children();
            if (ka.size() != kb.size()) return ka.size() < kb.size() ? -1 : 1;
            for (size_t i = 0; i < ka.size(); ++i) {
                if (int c = compare(ka[i], kb[i]); c != 0) return c;
            }
            return 0;
        }
        case FKind::MetaVar:
        case FKind::PropVar: {
            if (int c = a.var_name().compare(b.var_name()); c != 0) return c < 0 ? -1 : 1;
            return 0;
        }
        case FKind::SourcePropVar: {
            if (int c = a.var_name().compare(b.var_name()); c != 0) return c < 0 ? -1 : 1;
            if (int c = a.var_tag().compare(b.var_tag()); c != 0) return c < 0 ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

namespace {
void render_into(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case FKind::Prop:
            out += 'p';
            out += std::to_string(f.prop_index());
            return;
        case FKind::App: {
            const auto& c = f.ctor();
            if (c.arity == 0) {
                out += c.token();
                return;
            }
            out += '(';
            out += c.token();
            for (const auto& k : f.children()) {
                out += ' ';
                render_into(k, out);
            }
            out += ')';
            return;
        }
        case FKind::MetaVar:
            out += '?';
            out += f.var_name();
            return;
        case FKind::PropVar:
            out += '@';
            out += f.var_name();
            return;
        case FKind::SourcePropVar:
            out += '@';
            out += f.var_name();
            out += '.';
            out += f.var_tag();
            return;
    }
}
}  // namespace

std::string render(const Formula& f) {
    std::string out;
    render_into(f, out);
    return out;
}

namespace {
void collect_props(const Formula& f, std::set<uint32_t>& acc) {
    if (f.kind() == FKind::Prop) {
        acc.insert(f.prop_index());
    } else if (f.kind() == FKind::App) {
        for (const auto& k : f.children()) collect_props(k, acc);
    }
}
}  // namespace

std::vector<uint32_t> prop_indices(const Formula& f) {
    std::set<uint32_t> acc;
    collect_props(f, acc);
    return {acc.begin(), acc.end()};
}

bool well_formed(const Formula& f, const Signature& sig) {
    switch (f.kind()) {
        case FKind::App: {
            if (!sig.contains(f.ctor())) return false;
            for (const auto& k : f.children())
                if (!well_formed(k, sig)) return false;
            return true;
        }
        default:
            return true;
    }
}

}  // namespace logicfuse
