#include "logicfuse/map_algebra.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace logicfuse {

struct MapTerm::Node {
    Kind kind;
    Constructor ctor;            // Lift
    uint32_t index = 0;          // PropConst
    int n = 0, i = 0;            // Proj
    std::vector<MapTerm> kids;   // Agg
    MapTerm outer, inner;        // Comp
    int arity = 0;
    int width = 1;
};

MapTerm MapTerm::lift(Constructor c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Lift;
    n->arity = c.arity;
    n->ctor = std::move(c);
    return MapTerm(std::move(n));
}

MapTerm MapTerm::prop_const(uint32_t index) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::PropConst;
    n->index = index;
    return MapTerm(std::move(n));
}

MapTerm MapTerm::hole() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Hole;
    return MapTerm(std::move(n));
}

MapTerm MapTerm::proj(int pn, int pi) {
    if (pn < 1 || pi < 1 || pi > pn) throw std::invalid_argument("bad projection indices");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Proj;
    n->n = pn;
    n->i = pi;
    n->arity = pn;
    return MapTerm(std::move(n));
}

MapTerm MapTerm::agg(std::vector<MapTerm> children) {
    if (children.empty()) throw std::invalid_argument("empty aggregation");
    const int a = children.front().arity();
    for (const auto& k : children) {
        if (k.arity() != a) throw std::invalid_argument("aggregation children of unequal arity");
        if (k.width() != 1) throw std::invalid_argument("nested aggregation");
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Agg;
    n->arity = a;
    n->width = static_cast<int>(children.size());
    n->kids = std::move(children);
    return MapTerm(std::move(n));
}

MapTerm MapTerm::comp(MapTerm outer, MapTerm inner) {
    if (outer.empty() || inner.empty()) throw std::invalid_argument("empty composition part");
    if (outer.arity() != inner.width())
        throw std::invalid_argument("composition arity/width mismatch");
    if (outer.width() != 1) throw std::invalid_argument("tuple-valued composition head");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Comp;
    n->arity = inner.arity();
    n->outer = std::move(outer);
    n->inner = std::move(inner);
    return MapTerm(std::move(n));
}

MapTerm::Kind MapTerm::kind() const { return node_->kind; }
int MapTerm::arity() const { return node_->arity; }
int MapTerm::width() const { return node_->width; }
const Constructor& MapTerm::lifted() const { return node_->ctor; }
uint32_t MapTerm::prop_index() const { return node_->index; }
int MapTerm::proj_n() const { return node_->n; }
int MapTerm::proj_i() const { return node_->i; }
const std::vector<MapTerm>& MapTerm::agg_children() const { return node_->kids; }
const MapTerm& MapTerm::comp_outer() const { return node_->outer; }
const MapTerm& MapTerm::comp_inner() const { return node_->inner; }

bool MapTerm::operator==(const MapTerm& o) const {
    if (node_ == o.node_) return true;
    if (!node_ || !o.node_) return false;
    if (kind() != o.kind()) return false;
    switch (kind()) {
        case Kind::Lift: return lifted() == o.lifted();
        case Kind::PropConst: return prop_index() == o.prop_index();
        case Kind::Hole: return true;
        case Kind::Proj: return proj_n() == o.proj_n() && proj_i() == o.proj_i();
        case Kind::Agg: {
            const auto& a = agg_children();
            const auto& b = o.agg_children();
            if (a.size() != b.size()) return false;
            for (size_t i = 0; i < a.size(); ++i)
                if (!(a[i] == b[i])) return false;
            return true;
        }
        case Kind::Comp:
            return comp_outer() == o.comp_outer() && comp_inner() == o.comp_inner();
    }
    return false;
}

Formula apply_term(const MapTerm& m, std::span<const Formula> args) {
    if (static_cast<int>(args.size()) != m.arity())
        throw std::invalid_argument("map term applied to wrong number of arguments");
    switch (m.kind()) {
        case MapTerm::Kind::Lift:
            return Formula::app(m.lifted(), {args.begin(), args.end()});
        case MapTerm::Kind::PropConst:
            return Formula::prop(m.prop_index());
        case MapTerm::Kind::Hole:
            throw std::invalid_argument("cannot apply a map term containing a hole");
        case MapTerm::Kind::Proj:
            return args[static_cast<size_t>(m.proj_i() - 1)];
        case MapTerm::Kind::Agg:
            throw std::invalid_argument("cannot apply a tuple-valued map term");
        case MapTerm::Kind::Comp: {
            const MapTerm& inner = m.comp_inner();
            std::vector<Formula> piped;
            if (inner.kind() == MapTerm::Kind::Agg) {
                piped.reserve(inner.agg_children().size());
                for (const auto& k : inner.agg_children()) piped.push_back(apply_term(k, args));
            } else {
                piped.push_back(apply_term(inner, args));
            }
            return apply_term(m.comp_outer(), std::span<const Formula>(piped));
        }
    }
    throw std::logic_error("unreachable");
}

bool contains_hole(const MapTerm& m) {
    switch (m.kind()) {
        case MapTerm::Kind::Hole: return true;
        case MapTerm::Kind::Agg:
            for (const auto& k : m.agg_children())
                if (contains_hole(k)) return true;
            return false;
        case MapTerm::Kind::Comp:
            return contains_hole(m.comp_outer()) || contains_hole(m.comp_inner());
        default: return false;
    }
}

MapTerm substitute_hole(const MapTerm& m, uint32_t prop_index) {
    switch (m.kind()) {
        case MapTerm::Kind::Hole: return MapTerm::prop_const(prop_index);
        case MapTerm::Kind::Agg: {
            std::vector<MapTerm> kids;
            kids.reserve(m.agg_children().size());
            for (const auto& k : m.agg_children()) kids.push_back(substitute_hole(k, prop_index));
            return MapTerm::agg(std::move(kids));
        }
        case MapTerm::Kind::Comp:
            return MapTerm::comp(substitute_hole(m.comp_outer(), prop_index),
                                 substitute_hole(m.comp_inner(), prop_index));
        default: return m;
    }
}

Formula apply_term_with_hole(const MapTerm& m, std::span<const Formula> args,
                        const Formula& hole_value) {
    if (static_cast<int>(args.size()) != m.arity())
        throw std::invalid_argument("map term applied to wrong number of arguments");
    switch (m.kind()) {
        case MapTerm::Kind::Hole:
            return hole_value;
        case MapTerm::Kind::Comp: {
            const MapTerm& inner = m.comp_inner();
            std::vector<Formula> piped;
            if (inner.kind() == MapTerm::Kind::Agg) {
                piped.reserve(inner.agg_children().size());
                for (const auto& k : inner.agg_children())
                    piped.push_back(apply_term_with_hole(k, args, hole_value));
            } else {
                piped.push_back(apply_term_with_hole(inner, args, hole_value));
            }
            return apply_term_with_hole(m.comp_outer(), std::span<const Formula>(piped), hole_value);
        }
        default:
            return apply_term(m, args);
    }
}

uint64_t apply_term_hash(const MapTerm& m, std::span<const uint64_t> arg_hashes) {
    if (static_cast<int>(arg_hashes.size()) != m.arity())
        throw std::invalid_argument("map term applied to wrong number of arguments");
    switch (m.kind()) {
        case MapTerm::Kind::Lift:
            return formula_app_hash(m.lifted(), arg_hashes);
        case MapTerm::Kind::PropConst:
            return formula_prop_hash(m.prop_index());
        case MapTerm::Kind::Hole:
            throw std::invalid_argument("cannot apply a map term containing a hole");
        case MapTerm::Kind::Proj:
            return arg_hashes[static_cast<size_t>(m.proj_i() - 1)];
        case MapTerm::Kind::Agg:
            throw std::invalid_argument("cannot apply a tuple-valued map term");
        case MapTerm::Kind::Comp: {
            const MapTerm& inner = m.comp_inner();
            std::vector<uint64_t> piped;
            if (inner.kind() == MapTerm::Kind::Agg) {
                piped.reserve(inner.agg_children().size());
                for (const auto& k : inner.agg_children())
                    piped.push_back(apply_term_hash(k, arg_hashes));
            } else {
                piped.push_back(apply_term_hash(inner, arg_hashes));
            }
            return apply_term_hash(m.comp_outer(), std::span<const uint64_t>(piped));
        }
    }
    throw std::logic_error("unreachable");
}

std::string render_map_term(const MapTerm& m) {
    switch (m.kind()) {
        case MapTerm::Kind::Lift: return "lift:" + m.lifted().token();
        case MapTerm::Kind::PropConst: return "prop:p" + std::to_string(m.prop_index());
        case MapTerm::Kind::Hole: return "_";
        case MapTerm::Kind::Proj:
            return "proj:" + std::to_string(m.proj_n()) + ":" + std::to_string(m.proj_i());
        case MapTerm::Kind::Agg: {
            std::string out = "agg(";
            const auto& kids = m.agg_children();
            for (size_t i = 0; i < kids.size(); ++i) {
                if (i) out += ", ";
                out += render_map_term(kids[i]);
            }
            return out + ")";
        }
        case MapTerm::Kind::Comp:
            return "comp(" + render_map_term(m.comp_outer()) + ", " +
                   render_map_term(m.comp_inner()) + ")";
    }
    return {};
}

namespace {

struct MtParser {
    std::string_view text;
    size_t pos = 0;
    const Signature& host;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    SyntaxError err(const std::string& msg) const { return SyntaxError{pos, msg}; }

    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
                text[pos] == '_' || text[pos] == ':')) {
            ++pos;
        }
        return std::string(text.substr(start, pos - start));
    }

    Result<MapTerm> parse() {
        skip_ws();
        if (pos >= text.size()) return err("expected map term");
        if (text[pos] == '_') {
            ++pos;
            return MapTerm::hole();
        }
        size_t start = pos;
        std::string w = word();
        if (w.empty()) return err("expected map term");
        if (w == "agg" || w == "comp") {
            if (!eat('(')) return err("expected '(' after " + w);
            std::vector<MapTerm> parts;
            while (true) {
                auto part = parse();
                if (!part.ok()) return part;
                parts.push_back(std::move(part).value());
                if (eat(',')) continue;
                if (eat(')')) break;
                return err("expected ',' or ')'");
            }
            try {
                if (w == "agg") return MapTerm::agg(std::move(parts));
                if (parts.size() != 2) return SyntaxError{start, "comp takes two parts"};
                return MapTerm::comp(parts[0], parts[1]);
            } catch (const std::invalid_argument& e) {
                return SyntaxError{start, e.what()};
            }
        }
        if (w.rfind("lift:", 0) == 0) {
            std::string tok = w.substr(5);
            auto c = host.find(tok);
            if (!c) return SyntaxError{start, "unknown constructor in lift: " + tok};
            return MapTerm::lift(*c);
        }
        if (w.rfind("prop:", 0) == 0) {
            auto idx = prop_base_index(w.substr(5));
            if (!idx) return SyntaxError{start, "bad prop symbol in " + w};
            return MapTerm::prop_const(*idx);
        }
        if (w.rfind("proj:", 0) == 0) {
            int n = 0, i = 0;
            if (std::sscanf(w.c_str(), "proj:%d:%d", &n, &i) != 2)
                return SyntaxError{start, "bad projection " + w};
            try {
                return MapTerm::proj(n, i);
            } catch (const std::invalid_argument& e) {
                return SyntaxError{start, e.what()};
            }
        }
        return SyntaxError{start, "unrecognized map term: " + w};
    }
};

}  // namespace

Result<MapTerm> parse_map_term(std::string_view text, const Signature& host) {
    MtParser p{text, 0, host};
    auto r = p.parse();
    if (!r.ok()) return r;
    p.skip_ws();
    if (p.pos != text.size()) return SyntaxError{p.pos, "trailing input after map term"};
    return r;
}

namespace {
void collect_lifts(const MapTerm& m, std::vector<Constructor>& out) {
    switch (m.kind()) {
        case MapTerm::Kind::Lift: {
            for (const auto& c : out)
                if (c == m.lifted()) return;
            out.push_back(m.lifted());
            return;
        }
        case MapTerm::Kind::Agg:
            for (const auto& k : m.agg_children()) collect_lifts(k, out);
            return;
        case MapTerm::Kind::Comp:
            collect_lifts(m.comp_outer(), out);
            collect_lifts(m.comp_inner(), out);
            return;
        default: return;
    }
}
}  // namespace

std::vector<Constructor> lifted_constructors(const MapTerm& m) {
    std::vector<Constructor> out;
    collect_lifts(m, out);
    return out;
}

}  // namespace logicfuse
