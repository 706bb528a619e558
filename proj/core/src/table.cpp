#include "dilemma/table.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "dilemma/error.hpp"

namespace dilemma {

void require_committee_size(int n) {
    if (n < 1 || n > max_committee_size || n % 2 == 0)
        throw invalid_parameter("committee size must be odd and in [1, " +
                                std::to_string(max_committee_size) + "], got " + std::to_string(n));
}

void require_table(const VoteTable& T) {
    if (T.x < 0 || T.y < 0 || T.z < 0 || T.t < 0)
        throw invalid_parameter("table entries must be non-negative: " + to_string(T));
    require_committee_size(T.size());
}

void require_class(const TableClass& c, int n) {
    const int abs_rho = c.rho < 0 ? -c.rho : c.rho;
    if (c.alpha < 0 || abs_rho + c.alpha > n || (abs_rho + c.alpha - n) % 2 != 0)
        throw invalid_parameter("no table of size " + std::to_string(n) + " has class " +
                                to_string(c));
}

std::vector<VoteTable> enumerate_tables(int n) {
    require_committee_size(n);
    std::vector<VoteTable> out;
    for (int x = 0; x <= n; ++x)
        for (int y = 0; x + y <= n; ++y)
            for (int z = 0; z <= y && x + y + z <= n; ++z)
                out.push_back({x, y, z, n - x - y - z});
    std::sort(out.begin(), out.end(), [](const VoteTable& a, const VoteTable& b) {
        if (a.rho() != b.rho()) return a.rho() > b.rho();
        if (a.x != b.x) return a.x > b.x;
        return a.y > b.y;
    });
    return out;
}

std::vector<VoteTable> enumerate_ordered_tables(int n) {
    require_committee_size(n);
    std::vector<VoteTable> out;
    for (int x = n; x >= 0; --x)
        for (int y = n - x; y >= 0; --y)
            for (int z = n - x - y; z >= 0; --z)
                out.push_back({x, y, z, n - x - y - z});
    return out;
}

std::vector<TableClass> enumerate_classes(int n) {
    require_committee_size(n);
    std::vector<TableClass> out;
    for (int rho = n; rho >= -n; --rho) {
        const int abs_rho = rho < 0 ? -rho : rho;
        for (int alpha = (n - abs_rho) % 2; abs_rho + alpha <= n; alpha += 2)
            out.push_back({rho, alpha});
    }
    return out;
}

std::int64_t canonical_table_count(int n) {
    const std::int64_t m = n;
    return (2 * m * m * m + 15 * m * m + 34 * m + 21) / 24;
}

std::int64_t class_count(int n) {
    const std::int64_t m = n;
    return (m + 1) * (m + 2) / 2;
}

std::int64_t ordered_table_count(int n) {
    const std::int64_t m = n;
    return (m + 3) * (m + 2) * (m + 1) / 6;
}

std::map<int, std::int64_t> whitney_numbers(int n) {
    require_committee_size(n);
    auto odd_level = [n](int rho) {
        const std::int64_t d = n - rho;
        return (d + 4) * (d + 2) / 8;
    };
    std::map<int, std::int64_t> w;
    for (int rho = 0; rho <= n; ++rho) {
        const std::int64_t v = rho % 2 ? odd_level(rho) : odd_level(rho + 1);
        w[rho] = v;
        if (rho > 0) w[-rho] = v;
    }
    return w;
}

std::string to_string(const VoteTable& T) {
    std::ostringstream os;
    os << '(' << T.x << ',' << T.y << ',' << T.z << ',' << T.t << ')';
    return os.str();
}

std::string to_string(const TableClass& c) {
    std::ostringstream os;
    os << '(' << c.rho << ',' << c.alpha << ')';
    return os.str();
}

VoteTable parse_table(const std::string& text) {
    int v[4];
    const char* p = text.data();
    const char* end = text.data() + text.size();
    for (int k = 0; k < 4; ++k) {
        auto [next, ec] = std::from_chars(p, end, v[k]);
        if (ec != std::errc{}) throw invalid_parameter("malformed table '" + text + "'");
        p = next;
        if (k < 3) {
            if (p == end || *p != ',') throw invalid_parameter("malformed table '" + text + "'");
            ++p;
        }
    }
    if (p != end) throw invalid_parameter("malformed table '" + text + "'");
    VoteTable T{v[0], v[1], v[2], v[3]};
    require_table(T);
    return T;
}

}  // namespace dilemma
