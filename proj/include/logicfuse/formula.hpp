// Signatures, propositional symbols and formula trees.
//
// A constructor is identified by (base, tag, arity). The empty tag is
// reserved for constructors shared between two component logics after
// identification; component-specific constructors carry the tag of their
// logic ("it", "pl", "s4", "j3"). Propositional symbols form the
// denumerable family p1, p2, ... of the ambient signature. Propositional
// symbols of a source logic that survive into a combined signature become
// 0-ary constructors with base "p<k>" and the source tag (written
// "p1.pl", "p2.it", ...).
//
// Formula values are immutable trees shared through refcounted nodes;
// they are safe to share across threads. Besides ground material, a tree
// may contain pattern leaves used by rule schemas: ?x (formula
// metavariable), @x (propositional-symbol variable) and @x.tag
// (source-propositional-symbol variable).

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logicfuse/support.hpp"

namespace logicfuse {

using LogicTag = std::string;

struct Constructor {
    std::string base;
    LogicTag tag;
    int arity = 0;

    // "neg", "imp.pl", "p3.it"
    std::string token() const { return tag.empty() ? base : base + "." + tag; }
    bool operator==(const Constructor&) const = default;
};

// True iff the base names a propositional symbol: 'p' followed by a
// positive integer without leading zeros.
bool is_prop_base(std::string_view base);
std::optional<uint32_t> prop_base_index(std::string_view base);

class Signature {
  public:
    Signature() = default;
    Signature(std::string name, LogicTag prop_tag, std::vector<Constructor> ctors,
              std::vector<LogicTag> sourceprop_tags = {});

    const std::string& name() const { return name_; }
    const LogicTag& prop_tag() const { return prop_tag_; }
    const std::vector<Constructor>& constructors() const { return ctors_; }
    const std::vector<LogicTag>& sourceprop_tags() const { return sourceprop_tags_; }

    // Resolves a token like "neg" or "imp.pl"; also resolves members of a
    // declared source-prop family ("p3.pl"). Returns nullopt if unknown.
    std::optional<Constructor> find(std::string_view token) const;

    // Resolves a bare base against the declared constructors: succeeds
    // iff exactly one constructor has this base (used by infix sugar).
    std::optional<Constructor> find_unique_base(std::string_view base) const;

    bool has_sourceprops(const LogicTag& tag) const;
    bool contains(const Constructor& c) const;

    std::vector<Constructor> zeroary() const;

  private:
    std::string name_;
    LogicTag prop_tag_;
    std::vector<Constructor> ctors_;
    std::vector<LogicTag> sourceprop_tags_;
};

enum class FKind : uint8_t { Prop, App, MetaVar, PropVar, SourcePropVar };

class Formula {
  public:
    Formula() = default;

    static Formula prop(uint32_t index);
    static Formula app(Constructor c, std::vector<Formula> children = {});
    static Formula meta(std::string name);
    static Formula prop_var(std::string name);
    static Formula source_prop_var(std::string name, LogicTag tag);

    // Ground source-prop constant p<k>.<tag>.
    static Formula source_prop(uint32_t index, const LogicTag& tag);

    bool empty() const { return node_ == nullptr; }
    FKind kind() const;
    uint32_t prop_index() const;           // Prop
    const Constructor& ctor() const;       // App
    const std::vector<Formula>& children() const;  // App
    const std::string& var_name() const;   // MetaVar / PropVar / SourcePropVar
    const LogicTag& var_tag() const;       // SourcePropVar

    uint64_t hash() const;
    int depth() const;     // prop symbols and 0-ary constructors have depth 0
    bool is_ground() const;

    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }

  private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Total structural order; used to keep multisets canonically sorted.
int compare(const Formula& a, const Formula& b);
inline bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

std::string render(const Formula& f);

// Propositional indices occurring in f (ambient symbols only, not
// source-prop constants), sorted ascending.
std::vector<uint32_t> prop_indices(const Formula& f);

// Hash construction primitives, matching Formula::hash exactly. They let
// translation images be hashed without materializing the image tree.
uint64_t formula_prop_hash(uint32_t index);
uint64_t formula_app_hash(const Constructor& c, std::span<const uint64_t> child_hashes);

// Every constructor / prop symbol belongs to sig (patterns: variable
// leaves are always accepted).
bool well_formed(const Formula& f, const Signature& sig);

}  // namespace logicfuse
