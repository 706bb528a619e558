#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dilemma {

inline constexpr int max_committee_size = 99;

// Throws invalid_parameter unless n is odd and 1 <= n <= max_committee_size.
void require_committee_size(int n);

// Aggregated votes for P∧Q, P∧¬Q, ¬P∧Q and ¬P∧¬Q.
struct VoteTable {
    int x = 0;
    int y = 0;
    int z = 0;
    int t = 0;

    constexpr int size() const { return x + y + z + t; }
    constexpr int rho() const { return x - t; }
    constexpr int alpha() const { return y >= z ? y - z : z - y; }
    constexpr bool is_canonical() const { return y >= z; }

    friend constexpr auto operator<=>(const VoteTable&, const VoteTable&) = default;
};

// Quotient class (x - t, |y - z|).
struct TableClass {
    int rho = 0;
    int alpha = 0;

    friend constexpr auto operator<=>(const TableClass&, const TableClass&) = default;
};

constexpr VoteTable transpose(const VoteTable& T) { return {T.x, T.z, T.y, T.t}; }
constexpr VoteTable canonical(const VoteTable& T) { return T.y >= T.z ? T : transpose(T); }
constexpr TableClass table_class(const VoteTable& T) { return {T.rho(), T.alpha()}; }

// Throws invalid_parameter on negative entries or when the entries do not sum
// to an admissible committee size.
void require_table(const VoteTable& T);
void require_class(const TableClass& c, int n);

// All tables with y >= z ordered by descending rho, then descending x, then
// descending y.
std::vector<VoteTable> enumerate_tables(int n);

// All (x,y,z,t) with x+y+z+t = n, transposes kept apart, ordered by
// descending x, y, z.
std::vector<VoteTable> enumerate_ordered_tables(int n);

// All classes of committee size n ordered by descending rho, then ascending
// alpha.
std::vector<TableClass> enumerate_classes(int n);

// (2n^3 + 15n^2 + 34n + 21) / 24.
std::int64_t canonical_table_count(int n);
// (n+1)(n+2)/2.
std::int64_t class_count(int n);
// (n+3)(n+2)(n+1)/6.
std::int64_t ordered_table_count(int n);

// Number of canonical tables on each rank level rho = x - t, from the
// closed-form piecewise count.
std::map<int, std::int64_t> whitney_numbers(int n);

std::string to_string(const VoteTable& T);
std::string to_string(const TableClass& c);

// Parses "x,y,z,t".
VoteTable parse_table(const std::string& text);

}  // namespace dilemma
