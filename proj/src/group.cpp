#include "lclwb/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <variant>

#include "lclwb/errors.hpp"

namespace lclwb {

namespace {

struct FreeAbelianData {
    int dim;
};

struct FreeGroupData {
    int rank;
};

struct FiniteData {
    std::vector<std::vector<int>> table;
    std::vector<int> inverse;
    int identity;
};

struct ProductData {
    std::shared_ptr<const GroupOracle> left;
    std::shared_ptr<const GroupOracle> right;
};

std::string generator_name(int g) {
    // a, b, c, ... for small ranks, g7, g8, ... beyond.
    if (g <= 6) return std::string(1, char('a' + g - 1));
    return "g" + std::to_string(g);
}

}  // namespace

struct GroupOracle::Impl {
    std::variant<FreeAbelianData, FreeGroupData, FiniteData, ProductData> data;
};

GroupOracle GroupOracle::free_abelian(int dim) {
    if (dim < 0) throw std::invalid_argument("free_abelian: dimension must be >= 0");
    auto impl = std::make_shared<Impl>();
    impl->data = FreeAbelianData{dim};
    return GroupOracle(std::move(impl));
}

GroupOracle GroupOracle::free_group(int rank) {
    if (rank < 1) throw std::invalid_argument("free_group: rank must be >= 1");
    auto impl = std::make_shared<Impl>();
    impl->data = FreeGroupData{rank};
    return GroupOracle(std::move(impl));
}

GroupOracle GroupOracle::finite_group(std::vector<std::vector<int>> table) {
    const std::size_t n = table.size();
    if (n == 0) throw std::invalid_argument("finite_group: empty table");
    if (n > 512) throw std::invalid_argument("finite_group: table larger than 512 not supported");
    for (const auto& row : table) {
        if (row.size() != n) throw std::invalid_argument("finite_group: table is not square");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw std::invalid_argument("finite_group: table entry out of range");
    }
    // Identity: a two-sided neutral element.
    int identity = -1;
    for (std::size_t e = 0; e < n; ++e) {
        bool neutral = true;
        for (std::size_t x = 0; x < n && neutral; ++x)
            neutral = table[e][x] == static_cast<int>(x) && table[x][e] == static_cast<int>(x);
        if (neutral) {
            identity = static_cast<int>(e);
            break;
        }
    }
    if (identity < 0) throw std::invalid_argument("finite_group: table has no identity");
    // Inverses.
    std::vector<int> inverse(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (table[x][y] == identity && table[y][x] == identity) {
                inverse[x] = static_cast<int>(y);
                break;
            }
        }
        if (inverse[x] < 0) throw std::invalid_argument("finite_group: table element has no inverse");
    }
    // Associativity.
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (table[table[x][y]][z] != table[x][table[y][z]])
                    throw std::invalid_argument("finite_group: table is not associative");

    auto impl = std::make_shared<Impl>();
    impl->data = FiniteData{std::move(table), std::move(inverse), identity};
    return GroupOracle(std::move(impl));
}

GroupOracle GroupOracle::cyclic(int order) {
    if (order < 1) throw std::invalid_argument("cyclic: order must be >= 1");
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) table[i][j] = (i + j) % order;
    return finite_group(std::move(table));
}

GroupOracle GroupOracle::direct_product(GroupOracle left, GroupOracle right) {
    auto impl = std::make_shared<Impl>();
    impl->data = ProductData{std::make_shared<const GroupOracle>(std::move(left)),
                             std::make_shared<const GroupOracle>(std::move(right))};
    return GroupOracle(std::move(impl));
}

GroupFamily GroupOracle::family() const {
    switch (impl_->data.index()) {
        case 0: return GroupFamily::free_abelian;
        case 1: return GroupFamily::free_group;
        case 2: return GroupFamily::finite;
        default: return GroupFamily::direct_product;
    }
}

int GroupOracle::abelian_dim() const { return std::get<FreeAbelianData>(impl_->data).dim; }
int GroupOracle::free_rank() const { return std::get<FreeGroupData>(impl_->data).rank; }
int GroupOracle::finite_order() const {
    return static_cast<int>(std::get<FiniteData>(impl_->data).table.size());
}
int GroupOracle::finite_identity() const { return std::get<FiniteData>(impl_->data).identity; }
const GroupOracle& GroupOracle::left_factor() const {
    return *std::get<ProductData>(impl_->data).left;
}
const GroupOracle& GroupOracle::right_factor() const {
    return *std::get<ProductData>(impl_->data).right;
}

GroupElement GroupOracle::identity() const {
    switch (family()) {
        case GroupFamily::free_abelian:
            return GroupElement(std::vector<std::int64_t>(abelian_dim(), 0));
        case GroupFamily::free_group:
            return GroupElement({0});
        case GroupFamily::finite:
            return GroupElement({finite_identity()});
        case GroupFamily::direct_product:
            return pair(left_factor().identity(), right_factor().identity());
    }
    std::abort();
}

GroupElement GroupOracle::from_coords(const std::vector<std::int64_t>& coords) const {
    if (family() != GroupFamily::free_abelian)
        throw std::invalid_argument("from_coords: not a free abelian group");
    if (static_cast<int>(coords.size()) != abelian_dim())
        throw std::invalid_argument("from_coords: wrong dimension");
    return GroupElement(coords);
}

GroupElement GroupOracle::from_word(const std::vector<int>& letters) const {
    if (family() != GroupFamily::free_group)
        throw std::invalid_argument("from_word: not a free group");
    const int rank = free_rank();
    std::vector<std::int64_t> reduced;
    reduced.push_back(0);  // length slot
    for (int l : letters) {
        if (l == 0 || std::abs(l) > rank)
            throw std::invalid_argument("from_word: letter out of range");
        if (reduced.size() > 1 && reduced.back() == -static_cast<std::int64_t>(l))
            reduced.pop_back();
        else
            reduced.push_back(l);
    }
    reduced[0] = static_cast<std::int64_t>(reduced.size()) - 1;
    return GroupElement(std::move(reduced));
}

GroupElement GroupOracle::from_index(int index) const {
    if (family() != GroupFamily::finite)
        throw std::invalid_argument("from_index: not a finite group");
    if (index < 0 || index >= finite_order())
        throw std::invalid_argument("from_index: index out of range");
    return GroupElement({index});
}

GroupElement GroupOracle::pair(const GroupElement& left, const GroupElement& right) const {
    if (family() != GroupFamily::direct_product)
        throw std::invalid_argument("pair: not a direct product");
    std::vector<std::int64_t> data;
    data.reserve(1 + left.data().size() + right.data().size());
    data.push_back(static_cast<std::int64_t>(left.data().size()));
    data.insert(data.end(), left.data().begin(), left.data().end());
    data.insert(data.end(), right.data().begin(), right.data().end());
    return GroupElement(std::move(data));
}

std::pair<GroupElement, GroupElement> GroupOracle::split(const GroupElement& a) const {
    if (family() != GroupFamily::direct_product)
        throw std::invalid_argument("split: not a direct product");
    const auto& d = a.data();
    if (d.empty()) throw std::invalid_argument("split: malformed element");
    const auto len = d[0];
    if (len < 0 || static_cast<std::size_t>(len) + 1 > d.size())
        throw std::invalid_argument("split: malformed element");
    std::vector<std::int64_t> left(d.begin() + 1, d.begin() + 1 + len);
    std::vector<std::int64_t> right(d.begin() + 1 + len, d.end());
    return {GroupElement(std::move(left)), GroupElement(std::move(right))};
}

void GroupOracle::check_element(const GroupElement& a) const {
    switch (family()) {
        case GroupFamily::free_abelian:
            if (static_cast<int>(a.data().size()) != abelian_dim())
                throw std::invalid_argument("element has wrong dimension for " + name());
            return;
        case GroupFamily::free_group: {
            const auto& d = a.data();
            if (d.empty() || d[0] != static_cast<std::int64_t>(d.size()) - 1)
                throw std::invalid_argument("malformed word encoding for " + name());
            for (std::size_t i = 1; i < d.size(); ++i) {
                if (d[i] == 0 || std::abs(d[i]) > free_rank())
                    throw std::invalid_argument("word letter out of range for " + name());
                if (i + 1 < d.size() && d[i] == -d[i + 1])
                    throw std::invalid_argument("word is not reduced for " + name());
            }
            return;
        }
        case GroupFamily::finite:
            if (a.data().size() != 1 || a.data()[0] < 0 || a.data()[0] >= finite_order())
                throw std::invalid_argument("element index out of range for " + name());
            return;
        case GroupFamily::direct_product: {
            auto [l, r] = split(a);
            left_factor().check_element(l);
            right_factor().check_element(r);
            return;
        }
    }
}

GroupElement GroupOracle::multiply(const GroupElement& a, const GroupElement& b) const {
    switch (family()) {
        case GroupFamily::free_abelian: {
            std::vector<std::int64_t> out(a.data());
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.data()[i];
            return GroupElement(std::move(out));
        }
        case GroupFamily::free_group: {
            const auto& u = a.data();
            const auto& v = b.data();
            std::vector<std::int64_t> out;
            out.reserve(u.size() + v.size());
            out.push_back(0);
            out.insert(out.end(), u.begin() + 1, u.end());
            for (std::size_t i = 1; i < v.size(); ++i) {
                if (out.size() > 1 && out.back() == -v[i])
                    out.pop_back();
                else
                    out.push_back(v[i]);
            }
            out[0] = static_cast<std::int64_t>(out.size()) - 1;
            return GroupElement(std::move(out));
        }
        case GroupFamily::finite: {
            const auto& fd = std::get<FiniteData>(impl_->data);
            return GroupElement({fd.table[a.data()[0]][b.data()[0]]});
        }
        case GroupFamily::direct_product: {
            auto [al, ar] = split(a);
            auto [bl, br] = split(b);
            return pair(left_factor().multiply(al, bl), right_factor().multiply(ar, br));
        }
    }
    std::abort();
}

GroupElement GroupOracle::inverse(const GroupElement& a) const {
    switch (family()) {
        case GroupFamily::free_abelian: {
            std::vector<std::int64_t> out(a.data());
            for (auto& x : out) x = -x;
            return GroupElement(std::move(out));
        }
        case GroupFamily::free_group: {
            const auto& d = a.data();
            std::vector<std::int64_t> out;
            out.reserve(d.size());
            out.push_back(d.empty() ? 0 : d[0]);
            for (std::size_t i = d.size(); i > 1; --i) out.push_back(-d[i - 1]);
            return GroupElement(std::move(out));
        }
        case GroupFamily::finite: {
            const auto& fd = std::get<FiniteData>(impl_->data);
            return GroupElement({fd.inverse[a.data()[0]]});
        }
        case GroupFamily::direct_product: {
            auto [l, r] = split(a);
            return pair(left_factor().inverse(l), right_factor().inverse(r));
        }
    }
    std::abort();
}

bool GroupOracle::is_identity(const GroupElement& a) const { return a == identity(); }

std::vector<GroupElement> GroupOracle::standard_generators() const {
    std::vector<GroupElement> gens;
    switch (family()) {
        case GroupFamily::free_abelian: {
            for (int i = 0; i < abelian_dim(); ++i) {
                std::vector<std::int64_t> c(abelian_dim(), 0);
                c[i] = 1;
                gens.emplace_back(std::move(c));
            }
            return gens;
        }
        case GroupFamily::free_group: {
            for (int g = 1; g <= free_rank(); ++g) gens.push_back(from_word({g}));
            return gens;
        }
        case GroupFamily::finite: {
            for (int i = 0; i < finite_order(); ++i)
                if (i != finite_identity()) gens.push_back(from_index(i));
            return gens;
        }
        case GroupFamily::direct_product: {
            const auto li = left_factor().identity();
            const auto ri = right_factor().identity();
            for (const auto& g : left_factor().standard_generators()) gens.push_back(pair(g, ri));
            for (const auto& g : right_factor().standard_generators()) gens.push_back(pair(li, g));
            return gens;
        }
    }
    std::abort();
}

std::string GroupOracle::name() const {
    switch (family()) {
        case GroupFamily::free_abelian:
            return abelian_dim() == 1 ? "Z" : "Z^" + std::to_string(abelian_dim());
        case GroupFamily::free_group:
            return "F_" + std::to_string(free_rank());
        case GroupFamily::finite:
            return "finite(" + std::to_string(finite_order()) + ")";
        case GroupFamily::direct_product:
            return left_factor().name() + " x " + right_factor().name();
    }
    std::abort();
}

std::string GroupOracle::describe(const GroupElement& a) const {
    switch (family()) {
        case GroupFamily::free_abelian: {
            std::string s = "(";
            for (std::size_t i = 0; i < a.data().size(); ++i) {
                if (i) s += ",";
                s += std::to_string(a.data()[i]);
            }
            return s + ")";
        }
        case GroupFamily::free_group: {
            const auto& d = a.data();
            if (d.size() <= 1) return "1";
            std::string s;
            for (std::size_t i = 1; i < d.size(); ++i) {
                if (i > 1) s += ".";
                s += generator_name(static_cast<int>(std::abs(d[i])));
                if (d[i] < 0) s += "^-1";
            }
            return s;
        }
        case GroupFamily::finite:
            return "g" + std::to_string(a.data()[0]);
        case GroupFamily::direct_product: {
            auto [l, r] = split(a);
            return "(" + left_factor().describe(l) + ", " + right_factor().describe(r) + ")";
        }
    }
    std::abort();
}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet ElementSet::of(std::vector<GroupElement> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    ElementSet s;
    s.elems_ = std::move(elems);
    return s;
}

bool ElementSet::contains(const GroupElement& e) const {
    return std::binary_search(elems_.begin(), elems_.end(), e);
}

std::optional<std::size_t> ElementSet::index_of(const GroupElement& e) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
    if (it == elems_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - elems_.begin());
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

// ---------------------------------------------------------------------------
// GenSet and set powers

GenSet make_gen_set(const GroupOracle& oracle, const std::vector<GroupElement>& elems) {
    std::vector<GroupElement> all;
    all.reserve(2 * elems.size() + 1);
    all.push_back(oracle.identity());
    for (const auto& e : elems) {
        oracle.check_element(e);
        all.push_back(e);
        all.push_back(oracle.inverse(e));
    }
    return GenSet(ElementSet::of(std::move(all)));
}

GenSet subgroup_gen_set(const GroupOracle& oracle, const std::vector<GroupElement>& sub_generators) {
    return make_gen_set(oracle, sub_generators);
}

ElementSet set_power(const GroupOracle& oracle, const GenSet& s, int k, std::size_t limit) {
    if (k < 0) throw std::invalid_argument("set_power: k must be >= 0");
    ElementSet current = ElementSet::of({oracle.identity()});
    for (int step = 0; step < k; ++step) {
        std::vector<GroupElement> next;
        next.reserve(current.size() * s.size());
        for (const auto& x : current)
            for (const auto& g : s) next.push_back(oracle.multiply(x, g));
        ElementSet merged = ElementSet::of(std::move(next));
        if (merged.size() > limit) throw limit_error("set_power: result exceeds element limit");
        // 1 ∈ S makes powers nested, so a fixpoint is final (finite groups).
        if (merged == current) break;
        current = std::move(merged);
    }
    return current;
}

ElementSet ball_window(const GroupOracle& oracle, int radius, std::size_t limit) {
    return set_power(oracle, make_gen_set(oracle, oracle.standard_generators()), radius, limit);
}

ElementSet box_window(const GroupOracle& oracle, const std::vector<std::int64_t>& lo,
                      const std::vector<std::int64_t>& hi, std::size_t limit) {
    if (oracle.family() != GroupFamily::free_abelian)
        throw std::invalid_argument("box_window: requires a free abelian group");
    const int d = oracle.abelian_dim();
    if (static_cast<int>(lo.size()) != d || static_cast<int>(hi.size()) != d)
        throw std::invalid_argument("box_window: bounds have wrong dimension");
    std::size_t count = 1;
    for (int i = 0; i < d; ++i) {
        if (lo[i] > hi[i]) throw std::invalid_argument("box_window: empty range");
        count *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
        if (count > limit) throw limit_error("box_window: result exceeds element limit");
    }
    std::vector<GroupElement> pts;
    pts.reserve(count);
    std::vector<std::int64_t> cur(lo);
    while (true) {
        pts.emplace_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == hi[i]) {
            cur[i] = lo[i];
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    return ElementSet::of(std::move(pts));
}

}  // namespace lclwb
