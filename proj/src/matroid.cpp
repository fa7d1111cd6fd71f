#include "kadj/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "kadj/error.hpp"

namespace kadj {

namespace {

void check_ground_size(int m) {
    if (m < 0 || m > 62)
        throw RangeError("ground set size " + std::to_string(m) + " outside supported range 0..62");
}

// Subsets of [m] of a given size, ascending-mask order.
template <typename F>
void for_each_subset_of_size(int m, int size, F&& f) {
    if (size == 0) {
        f(0ULL);
        return;
    }
    if (size > m) return;
    std::uint64_t mask = (1ULL << size) - 1;
    std::uint64_t limit = 1ULL << m;
    while (mask < limit) {
        f(mask);
        // Gosper's hack: next mask with the same popcount.
        std::uint64_t c = mask & (~mask + 1);
        std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

} // namespace

VectorMatroid VectorMatroid::from_columns(std::vector<std::vector<Rational>> cols, int d) {
    check_ground_size(static_cast<int>(cols.size()));
    VectorMatroid m;
    m.ground_size = static_cast<int>(cols.size());
    m.dim = d;
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (cols[i].size() != static_cast<std::size_t>(d))
            throw DimensionError("column " + std::to_string(i + 1) + " has length " +
                                 std::to_string(cols[i].size()) + ", expected " +
                                 std::to_string(d));
    m.columns = std::move(cols);
    m.rank_full = m.rank((m.ground_size == 0 ? 0 : (~0ULL >> (64 - m.ground_size))));
    return m;
}

int VectorMatroid::rank(std::uint64_t subset_mask) const {
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < ground_size; ++i)
        if (subset_mask >> i & 1) rows.push_back(columns[static_cast<std::size_t>(i)]);
    if (rows.empty()) return 0;
    return static_cast<int>(rank_of(QMatrix::from_rows(rows, static_cast<std::size_t>(dim))));
}

int VectorMatroid::rank(const std::vector<int>& subset) const {
    std::uint64_t mask = 0;
    for (int e : subset) {
        if (e < 0 || e >= ground_size)
            throw RangeError("element " + std::to_string(e + 1) + " outside ground set [" +
                             std::to_string(ground_size) + "]");
        mask |= 1ULL << e;
    }
    return rank(mask);
}

std::vector<int> VectorMatroid::loops() const {
    std::vector<int> out;
    for (int i = 0; i < ground_size; ++i)
        if (is_zero_vector(columns[static_cast<std::size_t>(i)])) out.push_back(i);
    return out;
}

std::vector<std::vector<int>> VectorMatroid::parallel_classes() const {
    std::map<std::vector<Rational>, std::vector<int>> groups;
    for (int i = 0; i < ground_size; ++i) {
        const auto& c = columns[static_cast<std::size_t>(i)];
        if (is_zero_vector(c)) continue;
        groups[normalize_primitive(c)].push_back(i);
    }
    std::vector<std::vector<int>> out;
    std::map<int, std::vector<int>> by_first;
    for (auto& [key, members] : groups) by_first.emplace(members[0], members);
    for (auto& [first, members] : by_first) out.push_back(members);
    return out;
}

VectorMatroid matroid_of_restriction(const Arrangement& a, const Subspace& u) {
    if (static_cast<std::size_t>(u.n) != a.dim)
        throw DimensionError("subspace lives in F^" + std::to_string(u.n) +
                             ", arrangement in F^" + std::to_string(a.dim));
    std::vector<std::vector<Rational>> cols;
    for (const Hyperplane& h : a.hyperplanes) cols.push_back(matvec(u.basis, h.normal));
    return VectorMatroid::from_columns(std::move(cols), u.k);
}

std::vector<std::uint64_t> bases(const VectorMatroid& m) {
    std::vector<std::uint64_t> out;
    for_each_subset_of_size(m.ground_size, m.rank_full, [&](std::uint64_t s) {
        if (m.rank(s) == m.rank_full) out.push_back(s);
    });
    return out;
}

std::vector<long long> independence_numbers(const VectorMatroid& m) {
    std::vector<long long> out(static_cast<std::size_t>(m.rank_full) + 1, 0);
    for (int i = 0; i <= m.rank_full; ++i)
        for_each_subset_of_size(m.ground_size, i, [&](std::uint64_t s) {
            if (m.rank(s) == i) ++out[static_cast<std::size_t>(i)];
        });
    return out;
}

std::vector<std::uint64_t> circuits(const VectorMatroid& m) {
    std::vector<std::uint64_t> out;
    for (int size = 1; size <= m.rank_full + 1; ++size)
        for_each_subset_of_size(m.ground_size, size, [&](std::uint64_t s) {
            for (std::uint64_t c : out)
                if ((c & s) == c) return; // contains a smaller circuit
            if (m.rank(s) != size - 1) return;
            // All maximal proper subsets must be independent.
            for (int e = 0; e < m.ground_size; ++e)
                if ((s >> e & 1) && m.rank(s & ~(1ULL << e)) != size - 1) return;
            out.push_back(s);
        });
    return out;
}

std::vector<int> natural_order(int m) {
    std::vector<int> o(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) o[static_cast<std::size_t>(i)] = i;
    return o;
}

std::vector<std::uint64_t> broken_circuits(const VectorMatroid& m,
                                           const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != m.ground_size)
        throw InputError("order must be a permutation of the ground set");
    std::vector<int> priority(static_cast<std::size_t>(m.ground_size), -1);
    for (std::size_t p = 0; p < order.size(); ++p) {
        int e = order[p];
        if (e < 0 || e >= m.ground_size || priority[static_cast<std::size_t>(e)] != -1)
            throw InputError("order must be a permutation of the ground set");
        priority[static_cast<std::size_t>(e)] = static_cast<int>(p);
    }
    std::set<std::uint64_t> out;
    for (std::uint64_t c : circuits(m)) {
        int max_e = -1;
        for (int e = 0; e < m.ground_size; ++e)
            if ((c >> e & 1) &&
                (max_e < 0 ||
                 priority[static_cast<std::size_t>(e)] > priority[static_cast<std::size_t>(max_e)]))
                max_e = e;
        out.insert(c & ~(1ULL << max_e));
    }
    return std::vector<std::uint64_t>(out.begin(), out.end());
}

std::vector<long long> nbc_counts(const VectorMatroid& m, const std::vector<int>& order) {
    std::vector<std::uint64_t> bc = broken_circuits(m, order);
    std::vector<long long> out(static_cast<std::size_t>(m.rank_full) + 1, 0);
    for (int i = 0; i <= m.rank_full; ++i)
        for_each_subset_of_size(m.ground_size, i, [&](std::uint64_t s) {
            for (std::uint64_t b : bc)
                if ((b & s) == b) return;
            ++out[static_cast<std::size_t>(i)];
        });
    return out;
}

namespace {

std::uint64_t closure(const VectorMatroid& m, std::uint64_t s, int rank_s) {
    std::uint64_t out = s;
    for (int e = 0; e < m.ground_size; ++e) {
        if (s >> e & 1) continue;
        if (m.rank(s | (1ULL << e)) == rank_s) out |= 1ULL << e;
    }
    return out;
}

} // namespace

MatroidLattice flats_lattice(const VectorMatroid& m) {
    MatroidLattice l;
    l.by_rank.assign(static_cast<std::size_t>(m.rank_full) + 1, {});

    std::map<std::uint64_t, int> seen;
    std::vector<std::pair<std::uint64_t, int>> flats; // (mask, rank)
    std::uint64_t bottom = closure(m, 0, 0);
    seen.emplace(bottom, 0);
    flats.emplace_back(bottom, 0);

    std::vector<std::uint64_t> frontier = {bottom};
    for (int r = 0; r < m.rank_full; ++r) {
        std::set<std::uint64_t> next;
        for (std::uint64_t f : frontier)
            for (int e = 0; e < m.ground_size; ++e) {
                if (f >> e & 1) continue;
                std::uint64_t g = closure(m, f | (1ULL << e), r + 1);
                if (!seen.count(g) && !next.count(g)) next.insert(g);
            }
        for (std::uint64_t g : next) {
            seen.emplace(g, static_cast<int>(flats.size()));
            flats.emplace_back(g, r + 1);
        }
        frontier.assign(next.begin(), next.end());
    }

    std::sort(flats.begin(), flats.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    for (std::size_t i = 0; i < flats.size(); ++i) {
        l.flats.push_back(flats[i].first);
        l.rank_of_flat.push_back(flats[i].second);
        l.by_rank[static_cast<std::size_t>(flats[i].second)].push_back(static_cast<int>(i));
    }
    l.mobius.assign(l.flats.size(), 0);
    l.mobius[0] = 1;
    for (std::size_t x = 1; x < l.flats.size(); ++x) {
        Integer s = 0;
        for (std::size_t y = 0; y < x; ++y)
            if (l.rank_of_flat[y] < l.rank_of_flat[x] && (l.flats[y] & l.flats[x]) == l.flats[y])
                s += l.mobius[y];
        l.mobius[x] = -s;
    }
    return l;
}

IntPoly characteristic_polynomial_matroid(const VectorMatroid& m) {
    MatroidLattice l = flats_lattice(m);
    std::vector<Integer> c(static_cast<std::size_t>(m.rank_full) + 1, Integer(0));
    for (std::size_t i = 0; i < l.flats.size(); ++i)
        c[static_cast<std::size_t>(m.rank_full - l.rank_of_flat[i])] += l.mobius[i];
    return IntPoly(std::move(c));
}

std::vector<Integer> whitney_numbers(const VectorMatroid& m) {
    IntPoly chi = characteristic_polynomial_matroid(m);
    std::vector<Integer> w(static_cast<std::size_t>(m.rank_full) + 1);
    for (int i = 0; i <= m.rank_full; ++i)
        w[static_cast<std::size_t>(i)] = chi.coeff(static_cast<std::size_t>(m.rank_full - i));
    return w;
}

bool matroid_equal(const VectorMatroid& a, const VectorMatroid& b) {
    if (a.ground_size != b.ground_size)
        throw InputError("matroids have different ground sizes " + std::to_string(a.ground_size) +
                         " and " + std::to_string(b.ground_size));
    return a.rank_full == b.rank_full && bases(a) == bases(b);
}

MatroidInvariants compute_invariants(const VectorMatroid& m) {
    MatroidInvariants inv;
    inv.rank = m.rank_full;
    inv.independence_numbers = independence_numbers(m);
    inv.whitney = whitney_numbers(m);
    inv.char_poly = characteristic_polynomial_matroid(m);
    inv.nbc = nbc_counts(m, natural_order(m.ground_size));
    std::vector<Integer> nc(static_cast<std::size_t>(m.rank_full) + 1);
    for (int i = 0; i <= m.rank_full; ++i) {
        Integer v(inv.nbc[static_cast<std::size_t>(i)]);
        nc[static_cast<std::size_t>(m.rank_full - i)] = (i % 2 == 0) ? v : -v;
    }
    inv.nbc_poly = IntPoly(std::move(nc));
    inv.loops = m.loops();
    inv.parallel_classes = m.parallel_classes();
    inv.bases_count = static_cast<long long>(bases(m).size());
    return inv;
}

} // namespace kadj
