#include "logicfuse/enumerate.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace logicfuse {

namespace {

using u128 = unsigned __int128;

constexpr uint64_t kMax = ~0ull;

// x^e capped at 2^64-1 (enough: any count beyond the cap aborts anyway).
uint64_t pow_capped(uint64_t x, int e) {
    u128 r = 1;
    for (int i = 0; i < e; ++i) {
        r *= x;
        if (r > kMax) return kMax;
    }
    return static_cast<uint64_t>(r);
}

}  // namespace

FormulaSpace::FormulaSpace(Signature sig, std::vector<uint32_t> vars, int max_depth)
    : sig_(std::move(sig)), vars_(std::move(vars)), max_depth_(max_depth) {
    if (max_depth_ < 0) throw std::invalid_argument("negative depth bound");
    for (uint32_t v : vars_) atoms_.push_back(Formula::prop(v));
    for (const auto& c : sig_.constructors()) {
        if (c.arity == 0) atoms_.push_back(Formula::app(c));
    }
    for (const auto& tag : sig_.sourceprop_tags()) {
        for (uint32_t v : vars_) atoms_.push_back(Formula::source_prop(v, tag));
    }
    if (atoms_.empty()) throw std::invalid_argument("formula space without atoms");
    for (const auto& c : sig_.constructors()) {
        if (c.arity >= 1) ctors_.push_back(&c);
    }

    counts_.resize(static_cast<size_t>(max_depth_) + 1);
    counts_[0] = atoms_.size();
    for (int d = 1; d <= max_depth_; ++d) {
        const uint64_t L = counts_[static_cast<size_t>(d - 1)];
        const uint64_t S = d >= 2 ? counts_[static_cast<size_t>(d - 2)] : 0;
        u128 total = L;
        if (L == kMax) total = u128(kMax) + 1;
        for (const auto* c : ctors_) {
            u128 block = u128(pow_capped(L, c->arity)) - pow_capped(S, c->arity);
            total += block;
            if (total > kMax) break;
        }
        if (total > kMax)
            throw std::overflow_error("formula space exceeds 2^64 at depth " + std::to_string(d));
        counts_[static_cast<size_t>(d)] = static_cast<uint64_t>(total);
    }
}

uint64_t FormulaSpace::count_at_most(int depth) const {
    if (depth < 0) return 0;
    if (depth > max_depth_) depth = max_depth_;
    return counts_[static_cast<size_t>(depth)];
}

Formula FormulaSpace::at(uint64_t index) const {
    if (index >= total()) throw std::out_of_range("formula index out of range");
    return decode(index, max_depth_);
}

Formula FormulaSpace::decode(uint64_t index, int depth) const {
    if (index < atoms_.size()) return atoms_[static_cast<size_t>(index)];
    // Find the exact-depth stratum.
    int d = 1;
    while (index >= counts_[static_cast<size_t>(d)]) ++d;
    (void)depth;
    uint64_t j = index - counts_[static_cast<size_t>(d - 1)];
    const uint64_t L = counts_[static_cast<size_t>(d - 1)];
    const uint64_t S = d >= 2 ? counts_[static_cast<size_t>(d - 2)] : 0;
    for (const auto* c : ctors_) {
        const int a = c->arity;
        const uint64_t block = pow_capped(L, a) - pow_capped(S, a);
        if (j >= block) {
            j -= block;
            continue;
        }
        // Unrank the j-th tuple (lexicographic over [0,L)^a) among those
        // with at least one child of exact depth d-1, i.e. index >= S.
        std::vector<Formula> kids(static_cast<size_t>(a));
        bool constrained = true;  // still need a deep child somewhere
        for (int t = 0; t < a; ++t) {
            const int rem = a - 1 - t;
            const uint64_t lrem = pow_capped(L, rem);
            uint64_t child;
            if (!constrained) {
                child = j / lrem;
                j %= lrem;
            } else {
                const uint64_t srem = pow_capped(S, rem);
                const uint64_t low_span = lrem - srem;  // per child index < S
                if (j < u128(S) * low_span) {
                    child = j / low_span;
                    j %= low_span;
                    // skip the all-shallow suffix block: suffixes are
                    // ranked among those containing a deep child, which
                    // is exactly rank j within (lrem - srem); decode
                    // recursively with the same convention below.
                    // Represent by re-encoding: suffix rank j maps into
                    // lex order over suffixes with >= 1 deep child.
                } else {
                    j -= static_cast<uint64_t>(u128(S) * low_span);
                    child = S + j / lrem;
                    j %= lrem;
                    constrained = false;
                }
            }
            kids[static_cast<size_t>(t)] = decode(child, d - 1);
        }
        return Formula::app(*c, std::move(kids));
    }
    throw std::logic_error("formula index decoding ran past the last block");
}

std::vector<Formula> enumerate_formulas(const Signature& sig, const std::vector<uint32_t>& vars,
                                        int max_depth, uint64_t cap) {
    FormulaSpace space(sig, vars, max_depth);
    if (space.total() > cap)
        throw std::overflow_error("enumeration of " + std::to_string(space.total()) +
                                  " formulas exceeds the cap");
    std::vector<Formula> out;
    out.reserve(static_cast<size_t>(space.total()));
    for (uint64_t i = 0; i < space.total(); ++i) out.push_back(space.at(i));
    return out;
}

std::vector<uint64_t> sample_indices(const FormulaSpace& space, size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    const uint64_t total = space.total();
    std::set<uint64_t> seen;
    std::vector<uint64_t> out;
    if (total <= n) {
        for (uint64_t i = 0; i < total; ++i) out.push_back(i);
        return out;
    }
    // Unbiased bounded draw by rejection from the top of the range.
    const uint64_t limit = total == 0 ? 0 : kMax - kMax % total;
    while (out.size() < n) {
        uint64_t r = rng();
        if (total > 0 && r >= limit) continue;
        uint64_t idx = r % total;
        if (seen.insert(idx).second) out.push_back(idx);
    }
    return out;
}

}  // namespace logicfuse
