#include "logicfuse/calculus_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "logicfuse/parse.hpp"

namespace logicfuse {

namespace {

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.emplace_back(line.substr(start, i - start));
    }
    return out;
}

struct Lines {
    std::vector<std::pair<size_t, std::string>> items;  // (offset, stripped text)

    explicit Lines(std::string_view text) {
        size_t start = 0;
        while (start < text.size()) {
            size_t eol = text.find('\n', start);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view line = text.substr(start, eol - start);
            size_t offset = start;
            start = eol + 1;
            if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
            size_t a = 0, b = line.size();
            while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
            while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
            if (b > a) items.emplace_back(offset + a, std::string(line.substr(a, b - a)));
        }
    }
};

struct SigBuilder {
    LogicTag prop_tag;
    std::vector<Constructor> ctors;
    std::vector<LogicTag> sourceprops;

    std::optional<SyntaxError> add(size_t pos, const std::vector<std::string>& w) {
        if (w[0] == "props") {
            if (w.size() != 2) return SyntaxError{pos, "props takes one tag"};
            prop_tag = w[1] == "-" ? LogicTag{} : w[1];
            return std::nullopt;
        }
        if (w[0] == "sourceprops") {
            if (w.size() != 2) return SyntaxError{pos, "sourceprops takes one tag"};
            sourceprops.push_back(w[1]);
            return std::nullopt;
        }
        if (w[0] == "ctor") {
            if (w.size() != 3) return SyntaxError{pos, "ctor takes a token and an arity"};
            std::string base = w[1], tag;
            if (auto dot = w[1].find('.'); dot != std::string::npos) {
                base = w[1].substr(0, dot);
                tag = w[1].substr(dot + 1);
            }
            int arity = 0;
            try {
                arity = std::stoi(w[2]);
            } catch (...) {
                return SyntaxError{pos, "bad arity " + w[2]};
            }
            if (arity < 0) return SyntaxError{pos, "negative arity"};
            ctors.push_back(Constructor{base, tag, arity});
            return std::nullopt;
        }
        return SyntaxError{pos, "unknown signature line: " + w[0]};
    }

    Signature build(const std::string& name) const {
        return Signature(name, prop_tag, ctors, sourceprops);
    }
};

}  // namespace

Result<LogicFile> parse_logic_file(std::string_view text) {
    Lines lines(text);
    LogicFile file;
    std::optional<SigBuilder> sig, source_sig;
    std::optional<SuccedentMode> mode;
    std::vector<RuleSchema> schemas;
    Matrix matrix;
    std::map<std::string, std::vector<Value>> tables;
    bool have_matrix = false;
    std::vector<std::pair<std::string, std::string>> translate_lines;  // (lhs token, rhs text)

    enum class Block { None, Signature, Calculus, Matrix, Source, Translate };
    Block block = Block::None;
    bool have_sig = false;

    auto parse_value_name = [&](const std::string& v) -> std::optional<Value> {
        for (size_t i = 0; i < matrix.values.size(); ++i)
            if (matrix.values[i] == v) return static_cast<Value>(i);
        return std::nullopt;
    };

    for (const auto& [pos, line] : lines.items) {
        auto w = split_words(line);
        if (block == Block::None) {
            if (w[0] == "logic") {
                if (w.size() != 2) return SyntaxError{pos, "logic takes one name"};
                file.name = w[1];
            } else if (w[0] == "signature") {
                sig.emplace();
                block = Block::Signature;
            } else if (w[0] == "source") {
                source_sig.emplace();
                block = Block::Source;
            } else if (w[0] == "calculus") {
                if (!have_sig) return SyntaxError{pos, "calculus before signature"};
                if (w.size() != 2 || (w[1] != "single" && w[1] != "multi"))
                    return SyntaxError{pos, "calculus takes 'single' or 'multi'"};
                mode = w[1] == "single" ? SuccedentMode::Single : SuccedentMode::Multi;
                block = Block::Calculus;
            } else if (w[0] == "matrix") {
                if (!have_sig) return SyntaxError{pos, "matrix before signature"};
                have_matrix = true;
                block = Block::Matrix;
            } else if (w[0] == "translate") {
                if (!have_sig) return SyntaxError{pos, "translate before signature"};
                block = Block::Translate;
            } else {
                return SyntaxError{pos, "unexpected line: " + line};
            }
            continue;
        }
        if (w[0] == "end") {
            if (block == Block::Signature) {
                try {
                    file.sig = sig->build(file.name);
                } catch (const std::invalid_argument& e) {
                    return SyntaxError{pos, e.what()};
                }
                have_sig = true;
            }
            block = Block::None;
            continue;
        }
        switch (block) {
            case Block::Signature:
                if (auto e = sig->add(pos, w)) return *e;
                break;
            case Block::Source:
                if (auto e = source_sig->add(pos, w)) return *e;
                break;
            case Block::Calculus: {
                size_t colon = line.find(':');
                if (colon == std::string::npos) return SyntaxError{pos, "missing ':'"};
                auto head = split_words(line.substr(0, colon));
                std::string body = line.substr(colon + 1);
                if (head.size() != 2 || (head[0] != "axiom" && head[0] != "rule"))
                    return SyntaxError{pos, "expected 'axiom NAME :' or 'rule NAME :'"};
                RuleSchema schema;
                schema.name = head[1];
                if (head[0] == "axiom") {
                    auto p = parse_sequent_pattern(body, file.sig);
                    if (!p.ok()) return SyntaxError{pos + colon, p.error().message};
                    schema.conclusion = std::move(p).value();
                } else {
                    size_t slash = body.rfind('/');
                    if (slash == std::string::npos)
                        return SyntaxError{pos, "rule needs '/' before its conclusion"};
                    std::string premises = body.substr(0, slash);
                    std::string conclusion = body.substr(slash + 1);
                    size_t start = 0;
                    while (start <= premises.size()) {
                        size_t semi = premises.find(';', start);
                        std::string part = premises.substr(
                            start, semi == std::string::npos ? std::string::npos : semi - start);
                        auto p = parse_sequent_pattern(part, file.sig);
                        if (!p.ok()) return SyntaxError{pos, p.error().message};
                        schema.premises.push_back(std::move(p).value());
                        if (semi == std::string::npos) break;
                        start = semi + 1;
                    }
                    auto c = parse_sequent_pattern(conclusion, file.sig);
                    if (!c.ok()) return SyntaxError{pos, c.error().message};
                    schema.conclusion = std::move(c).value();
                }
                schemas.push_back(std::move(schema));
                break;
            }
            case Block::Matrix: {
                if (w[0] == "values") {
                    matrix.values.assign(w.begin() + 1, w.end());
                } else if (w[0] == "designated") {
                    for (size_t i = 1; i < w.size(); ++i) {
                        auto v = parse_value_name(w[i]);
                        if (!v) return SyntaxError{pos, "unknown value " + w[i]};
                        matrix.designated.push_back(*v);
                    }
                } else if (w[0] == "table") {
                    size_t colon = line.find(':');
                    if (colon == std::string::npos) return SyntaxError{pos, "missing ':'"};
                    auto head = split_words(line.substr(0, colon));
                    if (head.size() != 2) return SyntaxError{pos, "table takes one constructor"};
                    auto c = file.sig.find(head[1]);
                    if (!c) return SyntaxError{pos, "unknown constructor " + head[1]};
                    std::vector<Value> row;
                    for (const auto& v : split_words(line.substr(colon + 1))) {
                        auto val = parse_value_name(v);
                        if (!val) return SyntaxError{pos, "unknown value " + v};
                        row.push_back(*val);
                    }
                    size_t expected = 1;
                    for (int i = 0; i < c->arity; ++i) expected *= matrix.values.size();
                    if (row.size() != expected)
                        return SyntaxError{pos, "table for " + head[1] + " needs " +
                                                    std::to_string(expected) + " entries"};
                    tables[c->token()] = std::move(row);
                } else {
                    return SyntaxError{pos, "unknown matrix line: " + w[0]};
                }
                break;
            }
            case Block::Translate: {
                size_t eq = line.find('=');
                if (eq == std::string::npos) return SyntaxError{pos, "missing '='"};
                auto lhs = split_words(line.substr(0, eq));
                if (lhs.size() != 1) return SyntaxError{pos, "translate line takes one token"};
                translate_lines.emplace_back(lhs[0], line.substr(eq + 1));
                break;
            }
            case Block::None:
                break;
        }
    }
    if (block != Block::None) return SyntaxError{text.size(), "unterminated block"};
    if (!have_sig) return SyntaxError{0, "missing signature"};

    if (mode) {
        try {
            file.calculus = GentzenCalculus(file.name, file.sig, *mode, std::move(schemas));
        } catch (const std::invalid_argument& e) {
            return SyntaxError{0, e.what()};
        }
    }
    if (have_matrix) {
        MatrixSemantics sem;
        sem.name = file.name;
        sem.sig = file.sig;
        sem.matrix = std::move(matrix);
        sem.tables = std::move(tables);
        file.semantics = std::move(sem);
    }
    if (!translate_lines.empty() || source_sig) {
        if (!source_sig) return SyntaxError{0, "translate block without source block"};
        ConstructorTranslation t;
        t.name = file.name;
        t.source = source_sig->build(file.name + "_source");
        t.host = file.sig;
        for (const auto& [lhs, rhs] : translate_lines) {
            auto m = parse_map_term(rhs, t.host);
            if (!m.ok()) return m.error();
            if (lhs == "prop") {
                t.prop_template = std::move(m).value();
            } else {
                auto c = t.source.find(lhs);
                if (!c) return SyntaxError{0, "translate line for unknown constructor " + lhs};
                t.ctor_map.emplace_back(*c, std::move(m).value());
            }
        }
        if (t.prop_template.empty()) return SyntaxError{0, "missing 'prop =' translate line"};
        file.translation = std::move(t);
    }
    return file;
}

std::string export_signature(const Signature& sig) {
    std::string out = "signature\n";
    out += "  props " + (sig.prop_tag().empty() ? std::string("-") : sig.prop_tag()) + "\n";
    for (const auto& t : sig.sourceprop_tags()) out += "  sourceprops " + t + "\n";
    for (const auto& c : sig.constructors())
        out += "  ctor " + c.token() + " " + std::to_string(c.arity) + "\n";
    out += "end\n";
    return out;
}

std::string export_calculus(const GentzenCalculus& g) {
    std::string out =
        std::string("calculus ") + (g.mode() == SuccedentMode::Single ? "single" : "multi") + "\n";
    for (const auto& r : g.schemas()) {
        if (r.is_axiom()) {
            out += "  axiom " + r.name + " : " + r.conclusion.render() + "\n";
        } else {
            out += "  rule " + r.name + " : ";
            for (size_t i = 0; i < r.premises.size(); ++i) {
                if (i) out += " ; ";
                out += r.premises[i].render();
            }
            out += " / " + r.conclusion.render() + "\n";
        }
    }
    out += "end\n";
    return out;
}

std::string export_semantics(const MatrixSemantics& sem) {
    std::string out = "matrix\n  values";
    for (const auto& v : sem.matrix.values) out += " " + v;
    out += "\n  designated";
    for (Value v : sem.matrix.designated) out += " " + sem.matrix.values[v];
    out += "\n";
    for (const auto& [token, table] : sem.tables) {
        out += "  table " + token + " :";
        for (Value v : table) out += " " + sem.matrix.values[v];
        out += "\n";
    }
    out += "end\n";
    return out;
}

std::string export_translation(const ConstructorTranslation& t) {
    std::string out = "source\n";
    out += "  props " + (t.source.prop_tag().empty() ? std::string("-") : t.source.prop_tag()) +
           "\n";
    for (const auto& c : t.source.constructors())
        out += "  ctor " + c.token() + " " + std::to_string(c.arity) + "\n";
    out += "end\ntranslate\n";
    out += "  prop = " + render_map_term(t.prop_template) + "\n";
    for (const auto& [c, m] : t.ctor_map)
        out += "  " + c.token() + " = " + render_map_term(m) + "\n";
    out += "end\n";
    return out;
}

std::string export_logic_file(const LogicFile& file) {
    std::string out = "logic " + file.name + "\n";
    out += export_signature(file.sig);
    if (file.translation) out += export_translation(*file.translation);
    if (file.calculus) out += export_calculus(*file.calculus);
    if (file.semantics) out += export_semantics(*file.semantics);
    return out;
}

namespace {
struct EmbeddedFile {
    std::string_view name;
    std::string_view content;
};
constexpr EmbeddedFile kEmbedded[] = {
#include "logicfuse/embedded_data.inc"
};
}  // namespace

std::string_view embedded_data(std::string_view filename) {
    for (const auto& f : kEmbedded)
        if (f.name == filename) return f.content;
    throw std::invalid_argument("no embedded data file named " + std::string(filename));
}

}  // namespace logicfuse
