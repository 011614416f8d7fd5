#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace koszul {

// A coordinate of an N-graded polynomial algebra: a name and a degree >= 0.
// Odd-degree coordinates anticommute and square to zero; even-degree
// coordinates are central up to the Koszul sign rule (which is trivial for
// them).
struct Coordinate {
    std::string name;
    int degree = 0;
};

// An ordered coordinate chart.  The ordinal of a coordinate (its position)
// fixes the normal ordering of monomials; products are rewritten into
// ascending ordinal order with the Koszul sign (-1)^{|x||y|} per
// transposition.
//
// A chart may additionally be a shifted cotangent chart T*[n]L: the first
// half of the coordinates are the base coordinates q_i, the second half the
// conjugate momenta p^i with |p^i| = n - |q_i|.  The canonical bracket is
// only defined on cotangent charts.
class Chart {
public:
    // Plain graded chart.  Validates: at least one coordinate, identifier
    // names, no duplicates, degrees >= 0.
    static std::shared_ptr<const Chart> make(std::vector<Coordinate> coords);

    // Shifted cotangent chart over `base`.  Requires n >= every base degree
    // (so momentum degrees are >= 0; n = 0 is legal over a degree-0 base).
    // The momentum of coordinate `q` is named `p(q)`.
    static std::shared_ptr<const Chart> shifted_cotangent(
        std::vector<Coordinate> base, int n);

    int size() const { return static_cast<int>(coords_.size()); }
    const Coordinate& coord(int ordinal) const { return coords_[ordinal]; }
    int degree(int ordinal) const { return coords_[ordinal].degree; }
    bool is_odd(int ordinal) const { return coords_[ordinal].degree % 2 != 0; }
    const std::string& name(int ordinal) const { return coords_[ordinal].name; }

    // Ordinal of a named coordinate, or -1.
    int ordinal(const std::string& name) const;

    bool is_cotangent() const { return shift_ >= 0; }
    int shift() const;  // throws unless cotangent

    int base_count() const { return base_count_; }
    bool is_momentum(int ordinal) const { return ordinal >= base_count_ && is_cotangent(); }
    // momentum ordinal of a base coordinate / base ordinal of a momentum
    // (-1 when not applicable).
    int momentum_of(int ordinal) const;
    int base_of(int ordinal) const;

    bool operator==(const Chart& o) const;

private:
    Chart() = default;
    std::vector<Coordinate> coords_;
    std::unordered_map<std::string, int> index_;
    int shift_ = -1;       // -1: not a cotangent chart
    int base_count_ = 0;   // = size() when not cotangent
};

using ChartPtr = std::shared_ptr<const Chart>;

// Two polynomials may be combined only over the same chart.
bool same_chart(const ChartPtr& a, const ChartPtr& b);

}  // namespace koszul
