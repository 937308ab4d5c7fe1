#include "lclwb/site_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace lclwb {

FiniteAction::FiniteAction(GroupOracle group, std::size_t site_count,
                           std::vector<std::vector<int>> generator_images)
    : group_(std::move(group)), sites_(site_count), forward_(std::move(generator_images)) {
    const auto gens = group_.standard_generators();
    if (forward_.size() != gens.size())
        throw std::invalid_argument("FiniteAction: one permutation per standard generator required");
    if (sites_ == 0) throw std::invalid_argument("FiniteAction: no sites");
    backward_.resize(forward_.size());
    for (std::size_t i = 0; i < forward_.size(); ++i) {
        const auto& p = forward_[i];
        if (p.size() != sites_) throw std::invalid_argument("FiniteAction: permutation sizes differ");
        std::vector<int> inv(sites_, -1);
        for (std::size_t s = 0; s < sites_; ++s) {
            if (p[s] < 0 || static_cast<std::size_t>(p[s]) >= sites_ || inv[p[s]] != -1)
                throw std::invalid_argument("FiniteAction: generator image is not a permutation");
            inv[p[s]] = static_cast<int>(s);
        }
        backward_[i] = std::move(inv);
    }
    validate_relations(group_, 0);
}

int FiniteAction::validate_relations(const GroupOracle& oracle, int index_offset) const {
    const auto commute = [&](int a, int b) {
        for (std::size_t s = 0; s < sites_; ++s)
            if (forward_[a][forward_[b][s]] != forward_[b][forward_[a][s]]) return false;
        return true;
    };
    switch (oracle.family()) {
        case GroupFamily::free_abelian: {
            const int d = oracle.abelian_dim();
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j)
                    if (!commute(index_offset + i, index_offset + j))
                        throw std::invalid_argument(
                            "FiniteAction: abelian generator images do not commute");
            return d;
        }
        case GroupFamily::free_group:
            return oracle.free_rank();  // no relations
        case GroupFamily::finite: {
            // Every element is a generator; the images must realize the table.
            const int order = oracle.finite_order();
            const int id = oracle.finite_identity();
            const auto perm_of = [&](int elem, std::size_t s) -> int {
                if (elem == id) return static_cast<int>(s);
                const int pos = elem < id ? elem : elem - 1;
                return forward_[index_offset + pos][s];
            };
            for (int a = 0; a < order; ++a)
                for (int b = 0; b < order; ++b) {
                    const GroupElement ab = oracle.multiply(oracle.from_index(a), oracle.from_index(b));
                    const int ab_idx = static_cast<int>(ab.data()[0]);
                    for (std::size_t s = 0; s < sites_; ++s)
                        if (perm_of(a, static_cast<std::size_t>(perm_of(b, s))) != perm_of(ab_idx, s))
                            throw std::invalid_argument(
                                "FiniteAction: images do not respect the multiplication table");
                }
            return order - 1;
        }
        case GroupFamily::direct_product: {
            const int left = validate_relations(oracle.left_factor(), index_offset);
            const int right = validate_relations(oracle.right_factor(), index_offset + left);
            for (int i = 0; i < left; ++i)
                for (int j = 0; j < right; ++j)
                    if (!commute(index_offset + i, index_offset + left + j))
                        throw std::invalid_argument(
                            "FiniteAction: factor images do not commute");
            return left + right;
        }
    }
    return 0;
}

void FiniteAction::generator_word(const GroupOracle& oracle, const GroupElement& g,
                                  int index_offset, std::vector<int>& out) const {
    switch (oracle.family()) {
        case GroupFamily::free_abelian: {
            const auto& c = g.data();
            for (std::size_t i = 0; i < c.size(); ++i) {
                const int letter = static_cast<int>(i) + 1 + index_offset;
                for (std::int64_t n = 0; n < std::abs(c[i]); ++n)
                    out.push_back(c[i] > 0 ? letter : -letter);
            }
            return;
        }
        case GroupFamily::free_group: {
            const auto& d = g.data();
            for (std::size_t i = 1; i < d.size(); ++i) {
                const int l = static_cast<int>(d[i]);
                out.push_back(l > 0 ? l + index_offset : l - index_offset);
            }
            return;
        }
        case GroupFamily::finite: {
            // Standard generators of a table group are all non-identity
            // elements, so every element is a single letter.
            const int idx = static_cast<int>(g.data()[0]);
            const int id = oracle.finite_identity();
            if (idx == id) return;
            const int pos = idx < id ? idx : idx - 1;  // generator list skips the identity
            out.push_back(pos + 1 + index_offset);
            return;
        }
        case GroupFamily::direct_product: {
            auto [l, r] = oracle.split(g);
            const int left_count =
                static_cast<int>(oracle.left_factor().standard_generators().size());
            generator_word(oracle.left_factor(), l, index_offset, out);
            generator_word(oracle.right_factor(), r, index_offset + left_count, out);
            return;
        }
    }
}

int FiniteAction::act(const GroupElement& g, int site) const {
    group_.check_element(g);
    std::vector<int> word;
    generator_word(group_, g, 0, word);
    // Left action: the word g = l1 l2 ... lk acts as l1∘(l2∘(...∘(lk·site))).
    int s = site;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int l = *it;
        s = l > 0 ? forward_[l - 1][s] : backward_[-l - 1][s];
    }
    return s;
}

}  // namespace lclwb
