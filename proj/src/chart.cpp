#include "koszul/chart.hpp"

#include <cctype>
#include <stdexcept>

#include "koszul/rational.hpp"

namespace koszul {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

void validate_base(const std::vector<Coordinate>& coords) {
    if (coords.empty())
        throw std::invalid_argument("chart needs at least one coordinate");
    for (const auto& c : coords) {
        if (!valid_identifier(c.name))
            throw std::invalid_argument("invalid coordinate name '" + c.name + "'");
        if (c.degree < 0)
            throw std::invalid_argument("coordinate '" + c.name +
                                        "' has negative degree");
    }
    for (size_t i = 0; i < coords.size(); ++i)
        for (size_t j = i + 1; j < coords.size(); ++j)
            if (coords[i].name == coords[j].name)
                throw std::invalid_argument("duplicate coordinate '" +
                                            coords[i].name + "'");
}

}  // namespace

std::shared_ptr<const Chart> Chart::make(std::vector<Coordinate> coords) {
    validate_base(coords);
    auto ch = std::shared_ptr<Chart>(new Chart());
    ch->coords_ = std::move(coords);
    ch->base_count_ = static_cast<int>(ch->coords_.size());
    for (int i = 0; i < ch->size(); ++i) ch->index_[ch->coords_[i].name] = i;
    return ch;
}

std::shared_ptr<const Chart> Chart::shifted_cotangent(
    std::vector<Coordinate> base, int n) {
    validate_base(base);
    if (n < 0) throw std::invalid_argument("shift must be >= 0");
    for (const auto& c : base)
        if (c.degree > n)
            throw std::invalid_argument(
                "shift " + std::to_string(n) + " is below the degree of '" +
                c.name + "' (momentum degree would be negative)");
    auto ch = std::shared_ptr<Chart>(new Chart());
    ch->base_count_ = static_cast<int>(base.size());
    ch->shift_ = n;
    ch->coords_ = base;
    for (const auto& c : base)
        ch->coords_.push_back({"p(" + c.name + ")", n - c.degree});
    for (int i = 0; i < ch->size(); ++i) ch->index_[ch->coords_[i].name] = i;
    return ch;
}

int Chart::ordinal(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int Chart::shift() const {
    if (shift_ < 0) throw std::invalid_argument("chart is not a shifted cotangent");
    return shift_;
}

int Chart::momentum_of(int ordinal) const {
    if (!is_cotangent() || ordinal >= base_count_) return -1;
    return ordinal + base_count_;
}

int Chart::base_of(int ordinal) const {
    if (!is_cotangent() || ordinal < base_count_) return -1;
    return ordinal - base_count_;
}

bool Chart::operator==(const Chart& o) const {
    if (shift_ != o.shift_ || base_count_ != o.base_count_) return false;
    if (coords_.size() != o.coords_.size()) return false;
    for (size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i].name != o.coords_[i].name ||
            coords_[i].degree != o.coords_[i].degree)
            return false;
    return true;
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

std::string render_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace koszul
