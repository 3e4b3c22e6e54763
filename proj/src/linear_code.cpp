#include "lrc/linear_code.hpp"

#include <limits>
#include <stdexcept>

#include "lrc/combinatorics.hpp"

namespace lrc {
namespace {

bool is_zero_matrix(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.field().is_zero(m.at(i, j))) return false;
    return true;
}

constexpr std::uint64_t kCodewordGuard = 1ull << 24;

}  // namespace

LinearCode make_code(Matrix G, std::optional<Matrix> H) {
    const std::size_t n = G.cols();
    const std::size_t k = G.rows();
    if (rank(G) != k)
        throw std::invalid_argument("generator must have full row rank");
    if (H) {
        if (H->field() != G.field())
            throw std::invalid_argument("generator and parity fields differ");
        if (H->cols() != n)
            throw std::invalid_argument("parity-check length mismatch");
        if (rank(*H) != n - k)
            throw std::invalid_argument("parity-check must have rank n - k");
        if (!is_zero_matrix(mat_mul(G, transpose(*H))))
            throw std::invalid_argument("generator and parity-check not orthogonal");
    }
    Field f = G.field();
    return LinearCode{std::move(f), n, k, std::move(G), std::move(H)};
}

LinearCode from_parity(const Matrix& H) {
    return make_code(kernel(H), row_basis(H));
}

std::size_t coord_rank(const LinearCode& c,
                       const std::vector<std::size_t>& n_set) {
    for (auto j : n_set)
        if (j >= c.n) throw std::out_of_range("coordinate out of range");
    if (n_set.empty()) return 0;
    return rank_of_columns(c.G, n_set);
}

LinearCode puncture(const LinearCode& c,
                    const std::vector<std::size_t>& n_set) {
    if (n_set.empty())
        throw std::invalid_argument("puncture needs a nonempty coordinate set");
    for (auto j : n_set)
        if (j >= c.n) throw std::out_of_range("coordinate out of range");
    Matrix gb = row_basis(columns_of(c.G, n_set));
    Matrix hb = kernel(gb);
    return make_code(std::move(gb), std::move(hb));
}

bool span_contains(const LinearCode& c, const std::vector<std::size_t>& n_set,
                   std::size_t j) {
    if (j >= c.n) throw std::out_of_range("coordinate out of range");
    std::vector<std::size_t> extended = n_set;
    extended.push_back(j);
    return coord_rank(c, extended) == coord_rank(c, n_set);
}

std::optional<DistanceMethod> distance_method_from_string(
    const std::string& s) {
    if (s == "codewords") return DistanceMethod::codewords;
    if (s == "columns") return DistanceMethod::columns;
    if (s == "lemma1") return DistanceMethod::lemma1;
    return std::nullopt;
}

std::string to_string(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::codewords: return "codewords";
        case DistanceMethod::columns: return "columns";
        case DistanceMethod::lemma1: return "lemma1";
    }
    return "?";
}

namespace {

DistanceResult distance_by_codewords(const LinearCode& c) {
    const Field& f = c.field;
    const std::uint64_t q = f.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.k; ++i) {
        if (total > kCodewordGuard / q)
            throw std::invalid_argument(
                "codeword enumeration guard exceeded (q^k > 2^24)");
        total *= q;
    }

    // Odometer over messages; each step changes one message digit, so the
    // codeword is updated by a single scaled generator row.
    std::vector<std::uint64_t> digits(c.k, 0);
    std::vector<Elem> cw(c.n, f.zero());
    const Elem wrap_delta = f.neg(f.from_int(q - 1));  // digit q-1 -> 0
    auto add_scaled = [&](std::size_t row, const Elem& delta) {
        for (std::size_t j = 0; j < c.n; ++j)
            cw[j] = f.add(cw[j], f.mul(delta, c.G.at(row, j)));
    };

    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t t = 0;
        while (digits[t] == q - 1) {
            add_scaled(t, wrap_delta);
            digits[t] = 0;
            ++t;
        }
        Elem delta =
            f.sub(f.from_int(digits[t] + 1), f.from_int(digits[t]));
        add_scaled(t, delta);
        ++digits[t];

        std::size_t weight = 0;
        for (std::size_t j = 0; j < c.n; ++j)
            if (!f.is_zero(cw[j])) ++weight;
        if (weight < best) best = weight;
    }
    return {best, true};
}

DistanceResult distance_by_columns(const LinearCode& c,
                                   std::optional<std::size_t> cap) {
    if (!c.H)
        throw std::invalid_argument(
            "columns method requires a parity-check matrix");
    const Matrix& h = *c.H;
    const std::size_t smax = std::min(cap.value_or(c.n - c.k + 1), c.n);
    for (std::size_t s = 1; s <= smax; ++s) {
        std::size_t found = 0;
        bool hit = for_each_subset(
            c.n, s, [&](const std::vector<std::size_t>& idx) {
                if (rank_of_columns(h, idx) < idx.size()) {
                    found = idx.size();
                    return true;
                }
                return false;
            });
        if (hit) return {found, true};
    }
    if (cap && *cap < c.n - c.k + 1) return {*cap, false};
    return {smax, true};  // unreachable for k >= 1; defensive
}

DistanceResult distance_by_erasures(const LinearCode& c) {
    if (c.n > 24)
        throw std::invalid_argument(
            "erasure enumeration guard exceeded (n > 24)");
    // d = min{|J| : rank([n] \ J) < k}, scanned in ascending |J| with
    // early exit; equals n - max{|N| : rank(N) < k}.
    for (std::size_t j = 1; j <= c.n; ++j) {
        std::size_t found = 0;
        bool hit = for_each_subset(
            c.n, j, [&](const std::vector<std::size_t>& erased) {
                std::vector<bool> gone(c.n, false);
                for (auto i : erased) gone[i] = true;
                std::vector<std::size_t> keep;
                keep.reserve(c.n - j);
                for (std::size_t i = 0; i < c.n; ++i)
                    if (!gone[i]) keep.push_back(i);
                if (coord_rank(c, keep) < c.k) {
                    found = erased.size();
                    return true;
                }
                return false;
            });
        if (hit) return {found, true};
    }
    throw std::logic_error("erasure scan found no witness");  // unreachable
}

}  // namespace

DistanceResult min_distance(const LinearCode& c, DistanceMethod method,
                            std::optional<std::size_t> cap) {
    if (c.k == 0)
        throw std::invalid_argument("minimum distance undefined for k = 0");
    switch (method) {
        case DistanceMethod::codewords: return distance_by_codewords(c);
        case DistanceMethod::columns: return distance_by_columns(c, cap);
        case DistanceMethod::lemma1: return distance_by_erasures(c);
    }
    throw std::logic_error("unknown distance method");
}

}  // namespace lrc
