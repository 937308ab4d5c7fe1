#ifndef LCLWB_UNION_FIND_HPP
#define LCLWB_UNION_FIND_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace lclwb {

// Classic union-find with path compression and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns the new root.
    std::uint32_t merge(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return a;
    }

    std::uint32_t component_size(std::uint32_t x) { return size_[find(x)]; }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

// Union-find without path compression whose merges can be undone in LIFO
// order; used by the backtracking search to maintain monochromatic
// components incrementally.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    std::uint32_t component_size(std::uint32_t x) const { return size_[find(x)]; }

    // Merges the components of a and b; records nothing if already joined.
    // Returns the size of the merged component.
    std::uint32_t merge(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return size_[a];
        if (size_[a] < size_[b]) std::swap(a, b);
        trail_.push_back(b);
        parent_[b] = a;
        size_[a] += size_[b];
        return size_[a];
    }

    std::size_t mark() const { return trail_.size(); }

    void rollback(std::size_t mark) {
        while (trail_.size() > mark) {
            const std::uint32_t child = trail_.back();
            trail_.pop_back();
            size_[parent_[child]] -= size_[child];
            parent_[child] = child;
        }
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
    std::vector<std::uint32_t> trail_;
};

}  // namespace lclwb

#endif
